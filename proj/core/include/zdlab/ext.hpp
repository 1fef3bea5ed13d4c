// Copyright 2026 The zdlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "zdlab/module.hpp"
#include "zdlab/predicates.hpp"
#include "zdlab/ring.hpp"

namespace zdlab {

inline constexpr unsigned kMaxVariables = 2;

/// Exponent vector in N^d, d <= 2. Unused slots stay 0.
struct Exponent {
  std::array<unsigned, kMaxVariables> e{};
  unsigned total() const { return e[0] + e[1]; }
  auto operator<=>(const Exponent&) const = default;
};

enum class ExtKind { Polynomial, Series };

/// Polynomials over N^d (d = 1 or 2), or power series in one variable
/// truncated at `precision`.
struct ExtShape {
  ExtKind kind = ExtKind::Polynomial;
  unsigned variables = 1;
  unsigned precision = 8;

  static ExtShape polynomial(unsigned variables = 1) { return {ExtKind::Polynomial, variables, 8}; }
  static ExtShape series(unsigned precision = 8) { return {ExtKind::Series, 1, precision}; }
  friend bool operator==(const ExtShape&, const ExtShape&) = default;
};

/// An element of R[G], M[G], R[[X]] or M[[X]] with finite support.
class ExtElement {
 public:
  using Base = std::variant<RingPtr, ModulePtr>;
  using Terms = std::map<Exponent, Elem>;

  /// Drops zero coefficients. Series terms at or beyond the precision are
  /// discarded and mark the element truncated.
  ExtElement(Base base, ExtShape shape, Terms terms = {});

  const Base& base() const { return base_; }
  const ExtShape& shape() const { return shape_; }
  const Terms& terms() const { return terms_; }
  bool truncated() const { return truncated_; }
  void mark_truncated() { truncated_ = true; }
  bool is_zero() const { return terms_.empty(); }
  bool over_ring() const { return std::holds_alternative<RingPtr>(base_); }
  /// The coefficient ring R (for module coefficients, the module's ring).
  const RingPtr& ring() const;
  const ModulePtr& module() const;
  Elem coefficient(Exponent e) const;

  /// Descending order, e.g. "2*X^2+X+3", "X1*X2+1", "series(8; X+1)".
  std::string to_string() const;

 private:
  std::string coefficient_label(Elem c) const;

  Base base_;
  ExtShape shape_;
  Terms terms_;
  bool truncated_ = false;
};

enum class ExtOp { Add, Mul, Act };

/// Add: same base. Mul: both over R. Act: a over R, b over M.
ExtElement ext_arith(const ExtElement& a, const ExtElement& b, ExtOp op);
/// The exact product, ignoring series precision.
ExtElement ext_exact_product(const ExtElement& a, const ExtElement& b);

/// c(f): the ideal generated by the coefficients.
Ideal content_ideal(const ExtElement& f);
/// c(g) for module coefficients: the submodule they generate.
Submodule content_submodule(const ExtElement& g);

/// f in Z(M[G]) (or Z(M[[X]])) decided by the content criterion: some
/// nonzero m has c(f) m = 0. Witness: the least such m.
Verdict is_zd_on_extension(const ExtElement& f, const ModulePtr& m);

/// Exhaustive search for a nonzero g in M[G] with exponents of total degree
/// at most `degree_bound` and f g = 0. Witness: the least such g.
Verdict brute_force_zd(const ExtElement& f, const ModulePtr& m, unsigned degree_bound,
                       std::size_t budget = std::size_t{1} << 20);

struct McCoyResult {
  Elem element;
  /// Least k with c(f)^k c(g) = 0.
  unsigned k;
};

/// Given f g = 0 with g != 0, a nonzero m in M with f m = 0, taken as the
/// least nonzero element of c(f)^(k-1) c(g).
McCoyResult mccoy_witness(const ExtElement& f, const ExtElement& g);

/// sum_i g_i X^{e_i} over the greedy generators of I, with e_i = i for one
/// variable and (i/2, i%2) for two.
ExtElement polynomial_with_content(const Ideal& ideal, ExtShape shape);

/// M[G] (or M[[X]]) is Auslander over R[G]: every f in Z(R[G]) is in Z(M[G]).
/// Runs the content criterion over one f per ideal. Witness: a polynomial.
Verdict extension_auslander(const ModulePtr& m, ExtShape shape);
/// M[G] (or M[[X]]) is torsion-free over R[G].
Verdict extension_torsion_free(const ModulePtr& m, ExtShape shape);

/// Parses "2*X^2 + X + 1", "X1*X2 + (1,0)", or "series(N; ...)".
/// Terms are joined by '+'; coefficients containing '+' or '*' are
/// parenthesized.
ExtElement parse_ext(std::string_view text, ExtElement::Base base, ExtShape shape = {});

}  // namespace zdlab
