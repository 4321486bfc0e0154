#pragma once

#include <cstdint>
#include <string>

#include "dtl/bytes.hpp"
#include "dtl/errors.hpp"

namespace dtl {

// Canonical encoding used everywhere a value is hashed or serialized:
// integers little-endian fixed-width, variable-length fields prefixed
// with a u32 length. Fixed-width fields are appended raw.
class Encoder {
public:
    Encoder& u8(std::uint8_t v) {
        buf_.push_back(v);
        return *this;
    }
    Encoder& u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
        return *this;
    }
    Encoder& u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
        return *this;
    }
    Encoder& raw(ByteView v) {
        buf_.insert(buf_.end(), v.begin(), v.end());
        return *this;
    }
    Encoder& blob(ByteView v) {
        u32(static_cast<std::uint32_t>(v.size()));
        return raw(v);
    }
    Encoder& str(const std::string& s) {
        return blob(ByteView(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
    }

    const Bytes& bytes() const { return buf_; }
    Bytes take() { return std::move(buf_); }

private:
    Bytes buf_;
};

class Decoder {
public:
    explicit Decoder(ByteView data) : data_(data) {}

    std::uint8_t u8() {
        need(1);
        return data_[pos_++];
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(data_[pos_++]) << (8 * i);
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(data_[pos_++]) << (8 * i);
        return v;
    }
    ByteView raw(std::size_t n) {
        need(n);
        ByteView v = data_.subspan(pos_, n);
        pos_ += n;
        return v;
    }
    Bytes blob() {
        std::uint32_t n = u32();
        ByteView v = raw(n);
        return Bytes(v.begin(), v.end());
    }
    std::string str() {
        Bytes b = blob();
        return std::string(b.begin(), b.end());
    }
    template <std::size_t N>
    std::array<std::uint8_t, N> fixed() {
        ByteView v = raw(N);
        std::array<std::uint8_t, N> out{};
        std::copy(v.begin(), v.end(), out.begin());
        return out;
    }

    bool done() const { return pos_ == data_.size(); }
    std::size_t remaining() const { return data_.size() - pos_; }

private:
    void need(std::size_t n) const {
        if (pos_ + n > data_.size()) raise(Errc::bad_payload, "truncated encoding");
    }
    ByteView data_;
    std::size_t pos_ = 0;
};

}  // namespace dtl
