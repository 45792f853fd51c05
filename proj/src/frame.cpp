#include "beliefs/frame.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace beliefs {

Frame::Frame(std::vector<std::string> labels) {
  if (labels.empty() || labels.size() > max_size) {
    throw validation_error("frame must have between 1 and " + std::to_string(max_size) +
                           " labels, got " + std::to_string(labels.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) {
      throw validation_error("frame labels must be non-empty");
    }
    if (!seen.insert(label).second) {
      throw validation_error("duplicate frame label: " + label);
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

const std::string& Frame::label(std::size_t i) const {
  if (i >= size()) {
    throw validation_error("label index " + std::to_string(i) + " out of range");
  }
  return (*labels_)[i];
}

std::optional<std::size_t> Frame::index_of(std::string_view label) const noexcept {
  const auto& ls = *labels_;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i] == label) return i;
  }
  return std::nullopt;
}

bool Frame::operator==(const Frame& other) const noexcept {
  return labels_ == other.labels_ || *labels_ == *other.labels_;
}

Subset::Subset(Frame frame, std::uint32_t bits) : frame_(std::move(frame)), bits_(bits) {
  if (bits_ > frame_.full_bits()) {
    throw validation_error("subset bits exceed the frame");
  }
}

Subset Subset::universe(Frame frame) {
  const auto bits = frame.full_bits();
  return Subset(std::move(frame), bits);
}

Subset Subset::singleton(Frame frame, std::size_t index) {
  if (index >= frame.size()) {
    throw validation_error("singleton index out of range");
  }
  return Subset(std::move(frame), std::uint32_t{1} << index);
}

Subset Subset::from_labels(Frame frame, std::span<const std::string> labels) {
  std::uint32_t bits = 0;
  for (const auto& label : labels) {
    const auto idx = frame.index_of(label);
    if (!idx) {
      throw validation_error("label not in frame: " + label);
    }
    bits |= std::uint32_t{1} << *idx;
  }
  return Subset(std::move(frame), bits);
}

std::size_t Subset::cardinality() const noexcept { return std::popcount(bits_); }

bool Subset::contains(std::size_t index) const {
  if (index >= frame_.size()) {
    throw validation_error("member index out of range");
  }
  return (bits_ >> index) & 1u;
}

Subset Subset::intersect(const Subset& other) const {
  require_same_frame(*this, other);
  return Subset(frame_, bits_ & other.bits_);
}

Subset Subset::unite(const Subset& other) const {
  require_same_frame(*this, other);
  return Subset(frame_, bits_ | other.bits_);
}

Subset Subset::complement() const noexcept { return Subset(frame_, ~bits_ & frame_.full_bits()); }

bool Subset::subset_of(const Subset& other) const {
  require_same_frame(*this, other);
  return (bits_ & ~other.bits_) == 0;
}

std::vector<std::string> Subset::member_labels() const {
  std::vector<std::string> out;
  out.reserve(cardinality());
  for (std::size_t i = 0; i < frame_.size(); ++i) {
    if ((bits_ >> i) & 1u) out.push_back(frame_.label(i));
  }
  return out;
}

bool Subset::operator==(const Subset& other) const {
  return frame_ == other.frame_ && bits_ == other.bits_;
}

Subset operator&(const Subset& a, const Subset& b) { return a.intersect(b); }
Subset operator|(const Subset& a, const Subset& b) { return a.unite(b); }
Subset operator~(const Subset& a) { return a.complement(); }

std::vector<Subset> enumerate_subsets(const Frame& frame) {
  std::vector<Subset> out;
  out.reserve(frame.subset_count());
  for (std::uint32_t bits = 0; bits <= frame.full_bits(); ++bits) {
    out.emplace_back(frame, bits);
  }
  return out;
}

void require_same_frame(const Frame& a, const Frame& b) {
  if (a != b) {
    throw validation_error("frames do not match");
  }
}

void require_same_frame(const Subset& a, const Subset& b) {
  require_same_frame(a.frame(), b.frame());
}

} // namespace beliefs
