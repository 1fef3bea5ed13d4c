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

#include "zdlab/zadapter.hpp"

#include <numeric>

namespace zdlab::zz {

namespace {

Witness integer_witness(long long k) { return Witness{WitnessKind::RingElement, {std::to_string(k)}, {}}; }

Witness ideal_witness_of(long long d) {
  return Witness{WitnessKind::Ideal, {"(" + std::to_string(d) + ")"}, {}};
}

void check_modulus(unsigned n) {
  if (n == 0 || n > kMaxModulus) throw Error("Z/n needs 1 <= n <= " + std::to_string(kMaxModulus));
}

}  // namespace

bool is_zero_divisor_on(long long k, unsigned n) {
  check_modulus(n);
  if (n == 1) return false;
  const long long r = ((k % n) + n) % n;
  return std::gcd(r, static_cast<long long>(n)) > 1;
}

std::vector<unsigned> zero_divisor_residues(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned r = 0; r < n; ++r)
    if (is_zero_divisor_on(r, n)) out.push_back(r);
  return out;
}

unsigned least_prime_factor(unsigned n) {
  if (n < 2) throw Error("least_prime_factor needs n >= 2");
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

Verdict auslander(unsigned n) {
  check_modulus(n);
  if (n == 1) return Verdict::zero_module();
  // Z(Z) = {0}, and 0 kills 1 + nZ.
  if (!is_zero_divisor_on(0, n)) return Verdict::fail(integer_witness(0));
  return Verdict::pass();
}

Verdict torsion_free(unsigned n) {
  check_modulus(n);
  if (n == 1) return Verdict::zero_module();
  // The least positive zero-divisor on Z/n is the least prime factor.
  const unsigned p = least_prime_factor(n);
  return Verdict::fail(integer_witness(p));
}

Verdict faithful(unsigned n) {
  check_modulus(n);
  if (n == 1) return Verdict::zero_module();
  return Verdict::fail(integer_witness(n));
}

Verdict property_A(unsigned n) {
  check_modulus(n);
  if (n == 1) return Verdict::zero_module();
  // (d) inside Z(Z/n) means g = gcd(d, n) > 1, and d kills n/g != 0.
  return Verdict::pass();
}

Verdict flat(unsigned n) {
  check_modulus(n);
  if (n == 1) return Verdict::zero_module();
  return Verdict::fail(ideal_witness_of(n));
}

Verdict faithfully_flat(unsigned n) { return flat(n); }

CaseReport check_case(unsigned n) {
  if (n < 1 || n > 30) throw Error("unknown Z-adapter case n = " + std::to_string(n));
  CaseReport c;
  c.n = n;
  c.auslander = auslander(n);
  c.torsion_free = torsion_free(n);
  if (n == 1) {
    c.degenerate = true;
    c.passed = true;
    return c;
  }
  // Z(Z/n) is a union of classes mod n, so (n) inside it is the class of 0.
  c.contains_ideal = is_zero_divisor_on(0, n);
  bool witness_ok = false;
  if (c.torsion_free.witness) {
    const long long k = std::stoll(c.torsion_free.witness->labels.at(0));
    witness_ok = k != 0 && is_zero_divisor_on(k, n) && !is_zero_divisor_of_ring(k);
  }
  c.passed = c.contains_ideal && c.auslander.holds && !c.torsion_free.holds && witness_ok;
  return c;
}

std::vector<unsigned> registered_cases() {
  std::vector<unsigned> out;
  for (unsigned n = 1; n <= 30; ++n) out.push_back(n);
  return out;
}

}  // namespace zdlab::zz
