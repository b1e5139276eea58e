#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace markedpoly {

using ElementId = std::size_t;

// A finite poset stored as its Hasse diagram. Elements are named by strings
// and indexed by first appearance. The transitive closure is computed once at
// construction, so comparability queries are constant time.
//
// Values are immutable after construction.
class Poset {
public:
  // Builds the poset generated by `relations` (pairs (lower, upper)). The
  // relation may contain implied pairs; covers are its transitive reduction.
  // Throws DuplicateElement, UnknownElementInCover or CycleDetected.
  static Poset validate(const std::vector<std::string>& elements,
                        const std::vector<std::pair<std::string, std::string>>& relations);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(ElementId p) const { return names_.at(p); }

  // Throws UnknownElement.
  ElementId index(const std::string& name) const;
  bool contains(const std::string& name) const { return index_.count(name) != 0; }

  bool less_than(ElementId p, ElementId q) const;
  bool less_than(const std::string& p, const std::string& q) const;
  bool comparable(ElementId p, ElementId q) const {
    return p == q || less_than(p, q) || less_than(q, p);
  }

  // q covers p, i.e. q ≻ p.
  bool covers(ElementId q, ElementId p) const;

  // Cover pairs (lower, upper), sorted by (lower, upper).
  const std::vector<std::pair<ElementId, ElementId>>& cover_pairs() const { return cover_pairs_; }
  // Elements covered by p.
  const std::vector<ElementId>& lower_covers(ElementId p) const { return lower_.at(p); }
  // Elements covering p.
  const std::vector<ElementId>& upper_covers(ElementId p) const { return upper_.at(p); }

  // Length of the longest chain ending at p.
  std::size_t height(ElementId p) const { return height_.at(p); }
  std::size_t height(const std::string& p) const { return height(index(p)); }

  bool is_minimal(ElementId p) const { return lower_.at(p).empty(); }
  bool is_maximal(ElementId p) const { return upper_.at(p).empty(); }
  bool is_extremal(ElementId p) const { return is_minimal(p) || is_maximal(p); }

  std::pair<std::vector<ElementId>, std::vector<ElementId>> extremal_elements() const;

  // All elements sorted by (height, index). A linear extension.
  const std::vector<ElementId>& linear_extension() const { return linear_extension_; }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.names_ == b.names_ && a.cover_pairs_ == b.cover_pairs_;
  }

private:
  Poset() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, ElementId> index_;
  std::vector<std::pair<ElementId, ElementId>> cover_pairs_;
  std::vector<std::vector<ElementId>> lower_;
  std::vector<std::vector<ElementId>> upper_;
  // below_[q][p] == true iff p < q.
  std::vector<std::vector<bool>> below_;
  std::vector<std::size_t> height_;
  std::vector<ElementId> linear_extension_;
};

} // namespace markedpoly
