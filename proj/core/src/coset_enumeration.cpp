// HLT coset enumeration over the trivial subgroup: every live coset in
// definition order has every relator scanned and filled, then its row
// completed. Coincidences are processed immediately with a union-find
// forwarding array; coset numbers are never reused.

#include <cstdint>
#include <vector>

#include "cpg/error.hpp"
#include "cpg/oracle.hpp"

namespace cpg {
namespace {

constexpr std::int32_t kUndefined = -1;

class Enumerator {
 public:
  Enumerator(std::size_t columns, std::vector<std::vector<std::uint32_t>> relators, std::size_t max_cosets)
      : ncols_(columns), relators_(std::move(relators)), max_cosets_(max_cosets) {}

  EnumerationOutcome run() {
    EnumerationOutcome out;
    out.max_cosets = max_cosets_;
    out.strategy = "HLT+immediate-coincidences";
    bool ok = add_coset() >= 0;
    for (std::size_t c = 0; ok && c < parent_.size(); ++c) {
      for (const auto& r : relators_) {
        if (!live(c)) break;
        if (!scan_and_fill(static_cast<std::int32_t>(c), r)) {
          ok = false;
          break;
        }
      }
      for (std::size_t x = 0; ok && live(c) && x < ncols_; ++x) {
        if (entry(c, x) == kUndefined && !define(static_cast<std::int32_t>(c), x)) ok = false;
      }
    }
    out.cosets_defined = parent_.size();
    out.cosets_collapsed = collapsed_;
    if (ok) {
      out.status = EnumerationOutcome::Status::kCompleted;
      out.order = parent_.size() - collapsed_;
    }
    return out;
  }

 private:
  std::int32_t& entry(std::size_t c, std::size_t x) { return table_[c * ncols_ + x]; }
  bool live(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }
  static std::size_t inverse(std::size_t x) { return x ^ 1U; }

  std::int32_t add_coset() {
    if (parent_.size() >= max_cosets_) return kUndefined;
    const auto c = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + ncols_, kUndefined);
    return c;
  }

  bool define(std::int32_t c, std::size_t x) {
    const std::int32_t d = add_coset();
    if (d == kUndefined) return false;
    entry(c, x) = d;
    entry(d, inverse(x)) = c;
    return true;
  }

  bool scan_and_fill(std::int32_t c, const std::vector<std::uint32_t>& r) {
    std::int32_t f = c;
    std::int32_t b = c;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(r.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, r[i]) != kUndefined) f = entry(f, r[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && entry(b, inverse(r[j])) != kUndefined) b = entry(b, inverse(r[j--]));
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        entry(f, r[i]) = b;
        entry(b, inverse(r[i])) = f;
        return true;
      }
      if (!define(f, r[i])) return false;
    }
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const std::int32_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::int32_t a, std::int32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    ++collapsed_;
    queue_.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      const std::int32_t e = queue_[q];
      for (std::size_t x = 0; x < ncols_; ++x) {
        const std::int32_t f = entry(e, x);
        if (f == kUndefined) continue;
        entry(f, inverse(x)) = kUndefined;
        const std::int32_t e1 = rep(e);
        const std::int32_t f1 = rep(f);
        if (entry(e1, x) != kUndefined) {
          merge(f1, entry(e1, x));
        } else if (entry(f1, inverse(x)) != kUndefined) {
          merge(e1, entry(f1, inverse(x)));
        } else {
          entry(e1, x) = f1;
          entry(f1, inverse(x)) = e1;
        }
      }
    }
  }

  std::size_t ncols_;
  std::vector<std::vector<std::uint32_t>> relators_;
  std::size_t max_cosets_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> queue_;
  std::size_t collapsed_ = 0;
};

}  // namespace

std::string EnumerationOutcome::to_string() const {
  return completed() ? "Completed(" + std::to_string(order) + ")" : "Overflow(" + std::to_string(max_cosets) + ")";
}

EnumerationOutcome todd_coxeter(const CyclicPresentationSpec& p, std::size_t max_cosets) {
  if (max_cosets < 1) throw Error(ErrorCode::kInvalidArgument, "max_cosets must be positive");
  std::vector<std::vector<std::uint32_t>> relators;
  for (const CyclicWord& r : relator_family(p)) {
    std::vector<std::uint32_t> cols;
    for (Letter l : r.base()) cols.push_back(2 * l.index + (l.sign < 0 ? 1 : 0));
    relators.push_back(std::move(cols));
  }
  return Enumerator(2 * std::size_t{p.n()}, std::move(relators), max_cosets).run();
}

}  // namespace cpg
