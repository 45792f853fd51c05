#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "beliefs/errors.hpp"

namespace beliefs {

/// Frame of discernment: an ordered list of distinct singleton labels.
/// Copies share the label storage, so passing frames by value is cheap.
class Frame {
public:
  static constexpr std::size_t max_size = 20;

  explicit Frame(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_->size(); }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }
  const std::string& label(std::size_t i) const;
  std::optional<std::size_t> index_of(std::string_view label) const noexcept;

  /// Bitmask with one bit per singleton, all set.
  std::uint32_t full_bits() const noexcept {
    return static_cast<std::uint32_t>((std::uint64_t{1} << size()) - 1);
  }
  std::size_t subset_count() const noexcept { return std::size_t{1} << size(); }

  /// Structural equality: same labels in the same order.
  bool operator==(const Frame& other) const noexcept;
  bool operator!=(const Frame& other) const noexcept { return !(*this == other); }

private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// An element of the power set, encoded as a bitmask over its frame.
/// Bit i set means the i-th label belongs to the subset.
class Subset {
public:
  Subset(Frame frame, std::uint32_t bits);

  static Subset empty_set(Frame frame) { return Subset(std::move(frame), 0); }
  static Subset universe(Frame frame);
  static Subset singleton(Frame frame, std::size_t index);
  static Subset from_labels(Frame frame, std::span<const std::string> labels);

  std::uint32_t bits() const noexcept { return bits_; }
  const Frame& frame() const noexcept { return frame_; }

  std::size_t cardinality() const noexcept;
  bool is_empty() const noexcept { return bits_ == 0; }
  bool is_universe() const noexcept { return bits_ == frame_.full_bits(); }
  bool contains(std::size_t index) const;

  Subset intersect(const Subset& other) const;
  Subset unite(const Subset& other) const;
  Subset complement() const noexcept;
  bool subset_of(const Subset& other) const;

  /// Labels of the members, in frame order.
  std::vector<std::string> member_labels() const;

  bool operator==(const Subset& other) const;
  bool operator!=(const Subset& other) const { return !(*this == other); }

private:
  Frame frame_;
  std::uint32_t bits_;
};

Subset operator&(const Subset& a, const Subset& b);
Subset operator|(const Subset& a, const Subset& b);
Subset operator~(const Subset& a);

/// All 2^n subsets in increasing bitmask order, from the empty set to the
/// full frame.
std::vector<Subset> enumerate_subsets(const Frame& frame);

/// Throws validation_error unless both subsets live on the same frame.
void require_same_frame(const Subset& a, const Subset& b);
void require_same_frame(const Frame& a, const Frame& b);

} // namespace beliefs
