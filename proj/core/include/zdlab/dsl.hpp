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

// Construction language for rings, modules and algebras.
//
//   Ring    := Z<n> | ZZ | Prod(Ring,Ring) | PolyQuot(Ring,poly)
//            | Localize(Ring,{elems}) | TotalQuotient(Ring)
//   Module  := Reg | Free(k) | Cyclic(elems) | Sum(Module,Module)
//            | Hom(Module) | Tensor(Module,Algebra)
//            | Localize(Module,{elems}) | Fractions(Module,{elems})
//            | Sub(Module,{elems})
//   Algebra := Algebra(Ring,Ring,incl)
//
// Modules are read against a ring context. Element literals use the
// syntax of the ring (or module) they belong to.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdlab/algebra.hpp"
#include "zdlab/module.hpp"
#include "zdlab/ring.hpp"

namespace zdlab::dsl {

/// Half-open byte range into the parsed text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// A parse or build error pointing at the offending text.
class DslError : public Error {
 public:
  DslError(const std::string& what, Span span) : Error(what), span_(span) {}
  Span span() const { return span_; }

 private:
  Span span_;
};

enum class Kind {
  // rings
  Zmod,
  Integers,
  Prod,
  PolyQuot,
  LocalizeRing,
  TotalQuotient,
  // modules
  Reg,
  Free,
  Cyclic,
  Sum,
  Hom,
  Tensor,
  LocalizeModule,
  Fractions,
  Sub,
  // algebras
  Algebra,
};

enum class Sort { Ring, Module, Algebra };

Sort sort_of(Kind k);

struct Node {
  Kind kind = Kind::Zmod;
  Span span;
  /// n for Z<n>, k for Free(k).
  unsigned number = 0;
  /// The relation of PolyQuot, with spaces removed.
  std::string text;
  /// Element literals of Cyclic, Localize, Fractions and Sub.
  std::vector<std::string> items;
  std::vector<Node> children;
};

/// Structural equality; spans are ignored.
bool operator==(const Node& a, const Node& b);

Node parse_ring(std::string_view text);
Node parse_module(std::string_view text);
Node parse_algebra(std::string_view text);

/// Canonical text: no spaces, e.g. "Sum(Cyclic((0,1)),Reg)".
std::string print(const Node& node);

/// The integers cannot be tabulated; callers check for them first.
bool is_integers(const Node& ring);

RingPtr build_ring(const Node& node);
/// Builds a module in the context of `ring`. Localize changes the ring of
/// the result; Tensor moves it to the algebra.
ModulePtr build_module(const Node& node, const RingPtr& ring, const ModuleLimits& limits = {});
FiniteAlgebra build_algebra(const Node& node);

/// parse + build in one step.
RingPtr ring_from_text(std::string_view text);
ModulePtr module_from_text(std::string_view text, const RingPtr& ring, const ModuleLimits& limits = {});

/// Over the integers only Cyclic(n) with n >= 1 is accepted, naming Z/n.
/// Returns n; throws DslError for anything else.
unsigned integer_module_modulus(const Node& module);

/// Error text with a caret line under the span.
std::string render_error(std::string_view text, const DslError& e);

}  // namespace zdlab::dsl
