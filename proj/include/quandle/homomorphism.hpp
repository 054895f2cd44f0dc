#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "quandle/congruence.hpp"
#include "quandle/magma.hpp"

namespace quandle {

/// A function {0..domain_order-1} -> {0..codomain_order-1}.
class finite_map {
 public:
  finite_map(std::size_t codomain_order, std::vector<element> image)
      : codomain_order_(codomain_order), image_(std::move(image)) {
    if (image_.empty()) throw structure_error("finite_map: domain must be nonempty");
    for (element v : image_) {
      if (v >= codomain_order_) {
        throw structure_error("finite_map: image entry " + std::to_string(v) + " >= codomain order " +
                              std::to_string(codomain_order_));
      }
    }
  }

  static finite_map identity(std::size_t n) {
    std::vector<element> img(n);
    for (element x = 0; x < n; ++x) img[x] = x;
    return {n, std::move(img)};
  }

  static finite_map constant(std::size_t domain_order, std::size_t codomain_order, element value) {
    return {codomain_order, std::vector<element>(domain_order, value)};
  }

  std::size_t domain_order() const noexcept { return image_.size(); }
  std::size_t codomain_order() const noexcept { return codomain_order_; }
  element operator()(element x) const { return image_[x]; }
  const std::vector<element>& image() const noexcept { return image_; }

  /// Sorted distinct values taken by the map.
  std::vector<element> range() const {
    std::vector<element> out = image_;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool operator==(const finite_map&) const = default;

 private:
  std::size_t codomain_order_;
  std::vector<element> image_;
};

namespace detail {

inline void check_dimensions(const finite_map& f, const rack& r, const rack& s) {
  if (f.domain_order() != r.order() || f.codomain_order() != s.order()) {
    throw structure_error("map of shape " + std::to_string(f.domain_order()) + "->" +
                          std::to_string(f.codomain_order()) + " does not match racks of order " +
                          std::to_string(r.order()) + " and " + std::to_string(s.order()));
  }
}

inline bool respects_op(const finite_map& f, const rack& r, const rack& s, side sd) {
  for (element x = 0; x < r.order(); ++x) {
    for (element y = 0; y < r.order(); ++y) {
      if (f(r.op(x, y, sd)) != s.op(f(x), f(y), sd)) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Whether f(x ▷ y) = f(x) ▷ f(y) for all x, y. A map respecting ▷ always
/// respects ◁ as well; a violation of that raises std::logic_error.
inline bool is_homomorphism(const finite_map& f, const rack& r, const rack& s) {
  detail::check_dimensions(f, r, s);
  if (!detail::respects_op(f, r, s, side::primary)) return false;
  if (!detail::respects_op(f, r, s, side::inverse)) {
    throw std::logic_error("is_homomorphism: map respects the primary operation but not its inverse");
  }
  return true;
}

inline partition kernel_congruence(const finite_map& f, const rack& r, const rack& s) {
  if (!is_homomorphism(f, r, s)) throw axiom_error("kernel_congruence: map is not a rack homomorphism");
  return partition(f.image());
}

/// f(A) for a subset A of the domain.
inline std::vector<element> image_of(const finite_map& f, const std::vector<element>& subset) {
  std::vector<element> out;
  for (element x : subset) out.push_back(f(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// f^{-1}(B) for a subset B of the codomain.
inline std::vector<element> preimage_of(const finite_map& f, const std::vector<element>& subset) {
  std::vector<bool> in(f.codomain_order(), false);
  for (element y : subset) in.at(y) = true;
  std::vector<element> out;
  for (element x = 0; x < f.domain_order(); ++x) {
    if (in[f(x)]) out.push_back(x);
  }
  return out;
}

/// The rack structure on a subrack, relabelled 0..k-1 in the order of `elements`.
inline rack restrict_to(const rack& r, const std::vector<element>& elements) {
  if (!is_subrack(r, elements)) throw axiom_error("restrict_to: subset is not a subrack");
  std::vector<element> index(r.order(), 0);
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = i;
  return rack(magma::from_function(elements.size(), [&](element i, element j) {
    return index[r(elements[i], elements[j])];
  }));
}

struct first_isomorphism_result {
  bool holds = false;
  quotient_rack quotient;
  std::vector<element> image;  // elements of the image subrack of s
  finite_map induced;          // [x] -> position of f(x) in `image`
};

/// Builds R / ker f, the image subrack f(R) and psi([x]) = f(x), and checks
/// that psi is a bijective homomorphism.
inline first_isomorphism_result first_isomorphism(const finite_map& f, const rack& r, const rack& s) {
  auto kernel = kernel_congruence(f, r, s);
  auto q = quotient(r, kernel);
  auto img = f.range();
  rack image_rack = restrict_to(s, img);

  std::vector<element> psi(q.members.size());
  for (std::size_t b = 0; b < q.members.size(); ++b) {
    element fx = f(q.members[b].front());
    psi[b] = static_cast<element>(std::lower_bound(img.begin(), img.end(), fx) - img.begin());
  }
  finite_map induced(img.size(), psi);
  bool bijective = induced.range().size() == img.size() && psi.size() == img.size();
  bool hom = is_homomorphism(induced, q.table, image_rack);
  return {bijective && hom, std::move(q), std::move(img), std::move(induced)};
}

inline bool first_isomorphism_check(const finite_map& f, const rack& r, const rack& s) {
  return first_isomorphism(f, r, s).holds;
}

/// Every homomorphism r -> s, by exhaustive search over all |s|^|r| maps.
inline std::vector<finite_map> all_homomorphisms(const rack& r, const rack& s) {
  const std::size_t n = r.order();
  const std::size_t m = s.order();
  std::vector<finite_map> out;
  std::vector<element> img(n, 0);
  while (true) {
    finite_map f(m, img);
    if (is_homomorphism(f, r, s)) out.push_back(std::move(f));
    std::size_t i = 0;
    while (i < n && ++img[i] == m) img[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace quandle
