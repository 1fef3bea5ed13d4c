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

#include <algorithm>
#include <cctype>

#include "harness_internal.hpp"
#include "zdlab/harness.hpp"
#include "zdlab/zadapter.hpp"

namespace zdlab::harness {

struct Expr::Node {
  enum class Op { Atom, Not, And, Or } op = Op::Atom;
  std::string name;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using ExprNode = Expr::Node;
using NodePtr = std::shared_ptr<const ExprNode>;

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  NodePtr parse() {
    NodePtr n = disjunction();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("in expression '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr binary(ExprNode::Op op, NodePtr a, NodePtr b) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
  }

  NodePtr disjunction() {
    NodePtr n = conjunction();
    while (accept('|')) n = binary(ExprNode::Op::Or, n, conjunction());
    return n;
  }

  NodePtr conjunction() {
    NodePtr n = factor();
    while (accept('&')) n = binary(ExprNode::Op::And, n, factor());
    return n;
  }

  NodePtr factor() {
    if (accept('!')) {
      auto n = std::make_shared<ExprNode>();
      n->op = ExprNode::Op::Not;
      n->lhs = factor();
      return n;
    }
    if (accept('(')) {
      NodePtr n = disjunction();
      if (!accept(')')) fail("expected ')'");
      return n;
    }
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a predicate name");
    std::string name(s_.substr(start, pos_ - start));
    const auto& vocab = vocabulary();
    if (std::find(vocab.begin(), vocab.end(), name) == vocab.end()) fail("unknown predicate '" + name + "'");
    auto n = std::make_shared<ExprNode>();
    n->name = std::move(name);
    return n;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void collect(const ExprNode& n, std::vector<std::string>& out) {
  if (n.op == ExprNode::Op::Atom) {
    if (std::find(out.begin(), out.end(), n.name) == out.end()) out.push_back(n.name);
    return;
  }
  if (n.lhs) collect(*n.lhs, out);
  if (n.rhs) collect(*n.rhs, out);
}

bool eval_node(const ExprNode& n, const std::function<bool(const std::string&)>& atom) {
  switch (n.op) {
    case ExprNode::Op::Atom:
      return atom(n.name);
    case ExprNode::Op::Not:
      return !eval_node(*n.lhs, atom);
    case ExprNode::Op::And:
      return eval_node(*n.lhs, atom) && eval_node(*n.rhs, atom);
    case ExprNode::Op::Or:
      return eval_node(*n.lhs, atom) || eval_node(*n.rhs, atom);
  }
  return false;
}

Verdict plain(bool holds, const char* note) {
  Verdict v;
  v.holds = holds;
  if (!holds) v.note = note;
  return v;
}

}  // namespace

Expr Expr::parse(std::string_view text) {
  Expr e;
  e.text_ = std::string(text);
  e.root_ = ExprParser(text).parse();
  return e;
}

std::vector<std::string> Expr::atoms() const {
  std::vector<std::string> out;
  collect(*root_, out);
  return out;
}

bool Expr::eval(const std::function<bool(const std::string&)>& atom) const { return eval_node(*root_, atom); }

const std::vector<std::string>& vocabulary() {
  static const std::vector<std::string> v{"torsion_free", "auslander",  "property_a",
                                          "flat",         "faithfully_flat", "content_module",
                                          "faithful",     "reg_module", "free_module"};
  return v;
}

Verdict evaluate_predicate(const std::string& name, const ModulePtr& m, const Bounds& bounds) {
  if (name == "auslander") return detail::auslander(m, bounds);
  if (name == "torsion_free") return detail::torsion_free(m, bounds);
  if (name == "property_a") return has_property_A(m);
  if (name == "flat") return is_flat(m);
  if (name == "faithfully_flat") return is_faithfully_flat(m);
  if (name == "content_module") return is_content_module(m);
  if (name == "faithful") return is_faithful(m);
  if (name == "reg_module") return plain(m->tag() == ModuleTag::Regular, "not the regular module");
  if (name == "free_module") {
    const bool free = m->tag() == ModuleTag::Regular || m->tag() == ModuleTag::Free;
    return plain(free, "not constructed as a free module");
  }
  throw Error("unknown predicate '" + name + "'");
}

std::optional<Verdict> evaluate_integer_predicate(const std::string& name, unsigned n) {
  if (name == "auslander") return zz::auslander(n);
  if (name == "torsion_free") return zz::torsion_free(n);
  if (name == "property_a") return zz::property_A(n);
  if (name == "flat") return zz::flat(n);
  if (name == "faithfully_flat") return zz::faithfully_flat(n);
  if (name == "faithful") return zz::faithful(n);
  if (name == "reg_module") return plain(false, "Z/n is not the regular module");
  if (name == "free_module") return plain(false, "Z/n is not free");
  if (name == "content_module") return std::nullopt;
  throw Error("unknown predicate '" + name + "'");
}

SearchResult search_counterexample(const Expr& hyp, const Expr& concl, const Universe& u, const Bounds& bounds) {
  std::vector<std::string> atoms = hyp.atoms();
  for (const auto& a : concl.atoms())
    if (std::find(atoms.begin(), atoms.end(), a) == atoms.end()) atoms.push_back(a);

  struct MemberOutcome {
    bool supported = true;
    bool hypothesis = false;
    std::optional<SearchHit> hit;
  };

  auto judge = [&](const std::map<std::string, Verdict>& verdicts, std::string ring, std::string subject) {
    MemberOutcome o;
    auto value = [&](const std::string& a) { return verdicts.at(a).holds; };
    o.hypothesis = hyp.eval(value);
    if (!o.hypothesis || concl.eval(value)) return o;
    SearchHit hit{ring, subject, {}};
    for (const auto& a : concl.atoms()) {
      const Verdict& v = verdicts.at(a);
      if (!v.holds && v.witness) hit.witnesses.push_back({a, ring, subject, v.witness->kind, v.witness->labels, false});
    }
    o.hit = std::move(hit);
    return o;
  };

  const std::size_t finite = u.modules.size();
  const std::size_t total = finite + u.integer_moduli.size();
  auto outcomes = parallel_map<MemberOutcome>(total, [&](std::size_t i) {
    std::map<std::string, Verdict> verdicts;
    if (i < finite) {
      const ModulePtr& m = u.modules[i].module;
      for (const auto& a : atoms) verdicts.emplace(a, evaluate_predicate(a, m, bounds));
      return judge(verdicts, m->context(), m->descriptor());
    }
    const unsigned n = u.integer_moduli[i - finite];
    for (const auto& a : atoms) {
      auto v = evaluate_integer_predicate(a, n);
      if (!v) return MemberOutcome{false, false, std::nullopt};
      verdicts.emplace(a, *v);
    }
    return judge(verdicts, "ZZ", "Cyclic(" + std::to_string(n) + ")");
  });

  SearchResult r;
  r.members = total;
  for (auto& o : outcomes) {
    if (!o.supported) {
      ++r.unsupported;
      continue;
    }
    if (o.hypothesis) ++r.hypothesis_holds;
    if (o.hit) r.hits.push_back(std::move(*o.hit));
  }
  return r;
}

}  // namespace zdlab::harness
