#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace advmatch {

/// Minimal fixed width able to hold every value in 0..max_value, i.e.
/// ceil(log2(max_value + 1)); 0 for max_value == 0.
unsigned word_width(std::uint64_t max_value);

/// Append-only bit sequence with a forward-only read cursor. Every read
/// advances the cursor, so `bits_read()` is the advice complexity of the
/// reader.
class BitTape {
 public:
  BitTape() = default;
  explicit BitTape(std::vector<bool> bits) : bits_(std::move(bits)) {}

  void write_bit(bool bit) { bits_.push_back(bit); }
  /// Appends `width` bits, most significant first. Throws InvalidArgument
  /// when value >= 2^width.
  void write_word(std::uint64_t value, unsigned width);

  /// Throws TapeUnderflow when no unread bit remains.
  bool read_bit();
  /// Throws TapeUnderflow when fewer than `width` unread bits remain.
  std::uint64_t read_word(unsigned width);

  std::size_t size() const { return bits_.size(); }
  std::size_t cursor() const { return cursor_; }
  std::size_t bits_read() const { return cursor_; }
  std::size_t remaining() const { return bits_.size() - cursor_; }
  const std::vector<bool>& bits() const { return bits_; }

  /// Hex dump, first bit in the most significant position of the first
  /// nibble, zero padded to a whole nibble. Pair with size() for the length.
  std::string to_hex() const;
  static BitTape from_hex(std::string_view hex, std::size_t bit_count);

 protected:
  std::vector<bool> bits_;
  std::size_t cursor_ = 0;
};

/// Tape the algorithm writes for itself. Its last bit may be withdrawn as
/// long as nobody has read it.
class AuxTape : public BitTape {
 public:
  /// Throws InvalidArgument when the last bit was already read or the tape
  /// is empty.
  void remove_last();

  /// Every bit ever appended, including withdrawn ones.
  std::size_t bits_written() const { return size() + removed_; }
  std::size_t bits_removed() const { return removed_; }

 private:
  std::size_t removed_ = 0;
};

}  // namespace advmatch
