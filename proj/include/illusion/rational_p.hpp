#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace illusion {

// Threshold fraction p = num/den with 0 <= num <= den, always in lowest terms.
class RationalP {
 public:
  // 1/2.
  RationalP() = default;
  // Throws InvalidParameters unless 0 <= num <= den and den > 0.
  RationalP(std::int64_t num, std::int64_t den);

  // Parses "A/B". Decimal forms are rejected on purpose.
  static RationalP parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_half() const { return num_ == 1 && den_ == 2; }

  std::string str() const;

  friend bool operator==(const RationalP&, const RationalP&) = default;

 private:
  std::int64_t num_ = 1;
  std::int64_t den_ = 2;
};

}  // namespace illusion
