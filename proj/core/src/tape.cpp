#include "advmatch/tape.hpp"

#include <bit>
#include <string>

#include "advmatch/error.hpp"

namespace advmatch {

unsigned word_width(std::uint64_t max_value) {
  return static_cast<unsigned>(std::bit_width(max_value));
}

void BitTape::write_word(std::uint64_t value, unsigned width) {
  if (width > 64) throw InvalidArgument("word width above 64 bits");
  if (width < 64 && (value >> width) != 0) {
    throw InvalidArgument("value " + std::to_string(value) + " does not fit in " +
                          std::to_string(width) + " bits");
  }
  for (unsigned b = width; b-- > 0;) bits_.push_back(((value >> b) & 1U) != 0);
}

bool BitTape::read_bit() {
  if (cursor_ >= bits_.size()) {
    throw TapeUnderflow("tape underflow at bit " + std::to_string(cursor_));
  }
  return bits_[cursor_++];
}

std::uint64_t BitTape::read_word(unsigned width) {
  if (width > 64) throw InvalidArgument("word width above 64 bits");
  if (remaining() < width) {
    throw TapeUnderflow("tape underflow: need " + std::to_string(width) + " bits, " +
                        std::to_string(remaining()) + " left");
  }
  std::uint64_t value = 0;
  for (unsigned b = 0; b < width; ++b) value = (value << 1) | (bits_[cursor_++] ? 1U : 0U);
  return value;
}

std::string BitTape::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve((bits_.size() + 3) / 4);
  for (std::size_t i = 0; i < bits_.size(); i += 4) {
    unsigned nibble = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      nibble <<= 1;
      if (i + b < bits_.size() && bits_[i + b]) nibble |= 1U;
    }
    out.push_back(kDigits[nibble]);
  }
  return out;
}

BitTape BitTape::from_hex(std::string_view hex, std::size_t bit_count) {
  if (bit_count > hex.size() * 4) throw InvalidArgument("bit count exceeds hex payload");
  std::vector<bool> bits;
  bits.reserve(bit_count);
  for (char c : hex) {
    unsigned nibble = 0;
    if (c >= '0' && c <= '9') {
      nibble = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      nibble = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      nibble = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw InvalidArgument(std::string("invalid hex digit '") + c + "'");
    }
    for (int b = 3; b >= 0 && bits.size() < bit_count; --b) bits.push_back(((nibble >> b) & 1U) != 0);
  }
  return BitTape(std::move(bits));
}

void AuxTape::remove_last() {
  if (bits_.empty()) throw InvalidArgument("remove_last on an empty tape");
  if (cursor_ >= bits_.size()) throw InvalidArgument("remove_last on a bit that was already read");
  bits_.pop_back();
  ++removed_;
}

}  // namespace advmatch
