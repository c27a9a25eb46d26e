#pragma once

// Finite abelian groups A = Z/n1 + ... + Z/nk kept in the factor order the
// user gave. Elements are addressed by a flat index: coordinates in mixed
// radix with the first factor most significant, so index order is the
// lexicographic order on coordinate vectors and index 0 is the identity.

#include <anyonkit/config.hpp>
#include <anyonkit/error.hpp>
#include <anyonkit/qz.hpp>

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace anyonkit {

using Elem = std::uint32_t;

struct GroupElement {
  std::vector<i64> coords;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

class FinAbGroup {
 public:
  /// The trivial group.
  FinAbGroup() = default;

  explicit FinAbGroup(std::vector<i64> orders) : orders_(std::move(orders)) {
    stride_.assign(orders_.size(), 1);
    i128 total = 1;
    for (std::size_t i = orders_.size(); i-- > 0;) {
      require(orders_[i] >= 2, ErrorKind::InvalidArgument, "cyclic factor orders must be >= 2");
      stride_[i] = static_cast<i64>(total);
      total *= orders_[i];
      require(total <= (i128{1} << 62), ErrorKind::CapExceeded, "group order overflows");
      exponent_ = std::lcm(exponent_, orders_[i]);
    }
    order_ = static_cast<i64>(total);
    if (order_ <= kAddTableLimit) build_add_table();
  }

  const std::vector<i64>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  i64 order() const { return order_; }
  i64 exponent() const { return exponent_; }
  std::size_t size() const { return static_cast<std::size_t>(order_); }

  Elem identity() const { return 0; }
  Elem generator(std::size_t i) const { return static_cast<Elem>(stride_[i]); }

  i64 coord(Elem a, std::size_t i) const { return (static_cast<i64>(a) / stride_[i]) % orders_[i]; }

  std::vector<i64> coords(Elem a) const {
    std::vector<i64> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) c[i] = coord(a, i);
    return c;
  }

  /// Coordinates are reduced modulo the factor orders.
  Elem from_coords(std::span<const i64> c) const {
    require(c.size() == rank(), ErrorKind::InvalidArgument,
            "element has " + std::to_string(c.size()) + " coordinates, group rank is " + std::to_string(rank()));
    i64 idx = 0;
    for (std::size_t i = 0; i < rank(); ++i) idx += mod(c[i], orders_[i]) * stride_[i];
    return static_cast<Elem>(idx);
  }

  GroupElement element(Elem a) const { return GroupElement{coords(a)}; }
  Elem index(const GroupElement& g) const { return from_coords(g.coords); }

  Elem add(Elem a, Elem b) const {
    if (add_table_) return (*add_table_)[static_cast<std::size_t>(a) * size() + b];
    i64 out = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      i64 s = coord(a, i) + coord(b, i);
      if (s >= orders_[i]) s -= orders_[i];
      out += s * stride_[i];
    }
    return static_cast<Elem>(out);
  }

  Elem neg(Elem a) const {
    i64 out = 0;
    for (std::size_t i = 0; i < rank(); ++i) out += mod(-coord(a, i), orders_[i]) * stride_[i];
    return static_cast<Elem>(out);
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem scale(Elem a, i64 m) const {
    i64 out = 0;
    for (std::size_t i = 0; i < rank(); ++i)
      out += mulmod(coord(a, i), mod(m, orders_[i]), orders_[i]) * stride_[i];
    return static_cast<Elem>(out);
  }

  i64 element_order(Elem a) const {
    i64 o = 1;
    for (std::size_t i = 0; i < rank(); ++i) {
      i64 c = coord(a, i);
      o = std::lcm(o, orders_[i] / std::gcd(c, orders_[i]));
    }
    return o;
  }

  /// Factor orders concatenated: element (a, b) has index a * |B| + b.
  static FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
    std::vector<i64> o = a.orders_;
    o.insert(o.end(), b.orders_.begin(), b.orders_.end());
    return FinAbGroup(std::move(o));
  }

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) { return a.orders_ == b.orders_; }

  std::string describe() const {
    if (orders_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < rank(); ++i) s += (i ? "+Z/" : "Z/") + std::to_string(orders_[i]);
    return s;
  }

 private:
  static constexpr i64 kAddTableLimit = 512;

  void build_add_table() {
    auto table = std::make_shared<std::vector<Elem>>(size() * size());
    for (Elem a = 0; a < order_; ++a)
      for (Elem b = 0; b < order_; ++b) {
        i64 out = 0;
        for (std::size_t i = 0; i < rank(); ++i) {
          i64 s = coord(a, i) + coord(b, i);
          if (s >= orders_[i]) s -= orders_[i];
          out += s * stride_[i];
        }
        (*table)[static_cast<std::size_t>(a) * size() + b] = static_cast<Elem>(out);
      }
    add_table_ = std::move(table);
  }

  std::vector<i64> orders_;
  std::vector<i64> stride_;
  i64 order_ = 1;
  i64 exponent_ = 1;
  std::shared_ptr<const std::vector<Elem>> add_table_;
};

inline std::vector<GroupElement> enumerate_elements(const FinAbGroup& a, const Config& cfg = {}) {
  require(a.order() <= cfg.element_cap, ErrorKind::CapExceeded,
          "|A| = " + std::to_string(a.order()) + " exceeds element cap " + std::to_string(cfg.element_cap));
  std::vector<GroupElement> out;
  out.reserve(a.size());
  for (Elem x = 0; x < a.order(); ++x) out.push_back(a.element(x));
  return out;
}

/// |S^2(A)| by the product rule |S^2(B+C)| = |S^2 B| |S^2 C| |B (x) C|.
inline i64 sym_square_order(const FinAbGroup& a) {
  const auto& n = a.orders();
  std::function<i64(std::size_t)> rec = [&](std::size_t first) -> i64 {
    if (first == n.size()) return 1;
    i64 tensor = 1;  // |Z/n_first (x) (rest)|
    for (std::size_t j = first + 1; j < n.size(); ++j) tensor *= std::gcd(n[first], n[j]);
    return n[first] * rec(first + 1) * tensor;
  };
  return rec(0);
}

/// |A/2A|.
inline i64 two_quotient_order(const FinAbGroup& a) {
  i64 r = 1;
  for (i64 n : a.orders()) r *= std::gcd(n, i64{2});
  return r;
}

/// A homomorphism determined by the images of the standard generators.
class GroupHom {
 public:
  GroupHom(FinAbGroup domain, FinAbGroup codomain, std::vector<Elem> images)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
    require(images_.size() == domain_.rank(), ErrorKind::InvalidArgument, "GroupHom: one image per generator");
    for (std::size_t i = 0; i < images_.size(); ++i) {
      require(images_[i] < codomain_.order(), ErrorKind::InvalidArgument, "GroupHom: image out of range");
      require(domain_.orders()[i] % codomain_.element_order(images_[i]) == 0, ErrorKind::InvalidArgument,
              "GroupHom: order of image " + std::to_string(i) + " does not divide the generator order");
    }
  }

  static GroupHom identity(const FinAbGroup& a) {
    std::vector<Elem> im(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) im[i] = a.generator(i);
    return GroupHom(a, a, std::move(im));
  }

  const FinAbGroup& domain() const { return domain_; }
  const FinAbGroup& codomain() const { return codomain_; }
  const std::vector<Elem>& images() const { return images_; }

  Elem operator()(Elem x) const {
    Elem out = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
      out = codomain_.add(out, codomain_.scale(images_[i], domain_.coord(x, i)));
    return out;
  }

  /// Image of every domain element, in index order.
  std::vector<Elem> table() const {
    std::vector<Elem> t(domain_.size());
    for (Elem x = 0; x < domain_.order(); ++x) t[x] = (*this)(x);
    return t;
  }

  bool is_bijective() const {
    if (domain_.order() != codomain_.order()) return false;
    std::vector<char> hit(codomain_.size(), 0);
    for (Elem y : table()) {
      if (hit[y]) return false;
      hit[y] = 1;
    }
    return true;
  }

  /// (*this) o inner.
  GroupHom compose(const GroupHom& inner) const {
    require(inner.codomain_ == domain_, ErrorKind::InvalidArgument, "compose: group mismatch");
    std::vector<Elem> im(inner.images_.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = (*this)(inner.images_[i]);
    return GroupHom(inner.domain_, codomain_, std::move(im));
  }

  GroupHom inverse() const {
    require(is_bijective(), ErrorKind::InvalidArgument, "inverse of a non-bijective map");
    std::vector<Elem> pre(codomain_.size());
    auto t = table();
    for (Elem x = 0; x < domain_.order(); ++x) pre[t[x]] = x;
    std::vector<Elem> im(codomain_.rank());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = pre[codomain_.generator(i)];
    return GroupHom(codomain_, domain_, std::move(im));
  }

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.images_ == b.images_;
  }

 private:
  FinAbGroup domain_;
  FinAbGroup codomain_;
  std::vector<Elem> images_;
};

/// Depth-first search over isomorphisms A -> B in the canonical order: the
/// image of generator 0 ranges over B in index order, then generator 1, and
/// so on. `accept(i, images)` may veto the partial assignment whose last
/// entry is images[i]; `visit(hom)` returns false to stop the search.
/// Injectivity is enforced incrementally: each new image must have exactly the
/// generator's order and meet the span of the previous images trivially.
template <class Accept, class Visit>
void search_isomorphisms(const FinAbGroup& a, const FinAbGroup& b, Accept&& accept, Visit&& visit) {
  if (a.order() != b.order()) return;
  const std::size_t k = a.rank();
  std::vector<Elem> images(k, 0);
  std::vector<std::vector<char>> span(k + 1, std::vector<char>(b.size(), 0));
  std::vector<std::vector<Elem>> span_list(k + 1);
  span[0][0] = 1;
  span_list[0] = {0};
  bool stop = false;

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == k) {
      if (!visit(GroupHom(a, b, images))) stop = true;
      return;
    }
    const i64 n = a.orders()[i];
    for (Elem g = 0; g < b.order() && !stop; ++g) {
      if (b.element_order(g) != n) continue;
      bool independent = true;
      Elem m = g;
      for (i64 t = 1; t < n; ++t, m = b.add(m, g))
        if (span[i][m]) {
          independent = false;
          break;
        }
      if (!independent) continue;
      images[i] = g;
      if (!accept(i, images)) continue;
      auto& next = span[i + 1];
      std::fill(next.begin(), next.end(), 0);
      span_list[i + 1].clear();
      Elem mult = 0;
      for (i64 t = 0; t < n; ++t, mult = b.add(mult, g))
        for (Elem h : span_list[i]) {
          Elem s = b.add(h, mult);
          next[s] = 1;
          span_list[i + 1].push_back(s);
        }
      rec(i + 1);
    }
  };
  rec(0);
}

inline std::vector<GroupHom> enumerate_automorphisms(const FinAbGroup& a, const Config& cfg = {}) {
  require(a.order() <= cfg.automorphism_cap, ErrorKind::CapExceeded,
          "|A| = " + std::to_string(a.order()) + " exceeds automorphism cap " + std::to_string(cfg.automorphism_cap));
  std::vector<GroupHom> out;
  search_isomorphisms(
      a, a, [](std::size_t, const std::vector<Elem>&) { return true; },
      [&](GroupHom h) {
        require(static_cast<i64>(out.size()) < cfg.automorphism_count_cap, ErrorKind::CapExceeded,
                "automorphism count exceeds cap");
        out.push_back(std::move(h));
        return true;
      });
  return out;
}

/// A = A_2 + A_odd with |A_2| a power of two and |A_odd| odd.
struct TwoOddSplit {
  FinAbGroup two_part;
  FinAbGroup odd_part;
  /// The CRT isomorphism A -> two_part + odd_part (factor i of order 2^a m
  /// contributes Z/2^a to the first summand and Z/m to the second).
  GroupHom to_split;
};

inline TwoOddSplit decompose_two_odd(const FinAbGroup& a) {
  std::vector<i64> two, odd;
  std::vector<int> two_slot(a.rank(), -1), odd_slot(a.rank(), -1);
  for (std::size_t i = 0; i < a.rank(); ++i) {
    i64 n = a.orders()[i], p2 = 1;
    while (n % 2 == 0) {
      n /= 2;
      p2 *= 2;
    }
    if (p2 > 1) {
      two_slot[i] = static_cast<int>(two.size());
      two.push_back(p2);
    }
    if (n > 1) {
      odd_slot[i] = static_cast<int>(odd.size());
      odd.push_back(n);
    }
  }
  FinAbGroup two_g(two), odd_g(odd);
  FinAbGroup target = FinAbGroup::direct_sum(two_g, odd_g);
  std::vector<Elem> images(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    std::vector<i64> c(target.rank(), 0);
    if (two_slot[i] >= 0) c[two_slot[i]] = 1;
    if (odd_slot[i] >= 0) c[two.size() + odd_slot[i]] = 1;
    images[i] = target.from_coords(c);
  }
  return TwoOddSplit{two_g, odd_g, GroupHom(a, target, std::move(images))};
}

}  // namespace anyonkit
