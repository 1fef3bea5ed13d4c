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

// The integers as an analytic object. Z is a domain, so Z(Z) = {0} and every
// ideal is (d) for some d >= 0. The Z-module Z/n is handled through gcd
// arithmetic: k kills a nonzero element of Z/n iff gcd(k, n) > 1, which only
// depends on k mod n. Nothing here enumerates Z.

#include <string>
#include <vector>

#include "zdlab/predicates.hpp"

namespace zdlab::zz {

/// Largest modulus accepted for Z/n.
inline constexpr unsigned kMaxModulus = 1u << 16;

/// k in Z(Z/n). For n = 1 the module is zero and nothing is a zero-divisor.
bool is_zero_divisor_on(long long k, unsigned n);

/// k in Z(Z), i.e. k = 0.
inline bool is_zero_divisor_of_ring(long long k) { return k == 0; }

/// Residues r in [0, n) whose class lies in Z(Z/n). Z(Z/n) is exactly the
/// union of these classes.
std::vector<unsigned> zero_divisor_residues(unsigned n);

/// Least prime factor of n >= 2.
unsigned least_prime_factor(unsigned n);

/// Predicates on the Z-module Z/n, mirroring the finite ones. Witnesses are
/// integers, printed in decimal.
Verdict auslander(unsigned n);
Verdict torsion_free(unsigned n);
Verdict faithful(unsigned n);
/// Every ideal (d) inside Z(Z/n) kills (n / gcd(d, n)) + nZ.
Verdict property_A(unsigned n);
/// Z/n is flat over Z iff it is torsion-free, i.e. only for n = 1.
/// Witness: the ideal (n), since (n) (x) Z/n = Z/n while (n) Z/n = 0.
Verdict flat(unsigned n);
Verdict faithfully_flat(unsigned n);

/// Result of one registered Z-adapter case.
struct CaseReport {
  unsigned n = 0;
  bool degenerate = false;
  /// Every multiple of n lies in Z(Z/n), checked on the residue class of 0.
  bool contains_ideal = false;
  Verdict auslander;
  Verdict torsion_free;
  bool passed = false;
};

/// The Z-module Z/n for 2 <= n <= 30; n = 1 is reported degenerate.
/// Throws Error for any other n.
CaseReport check_case(unsigned n);

/// Registered case ids.
std::vector<unsigned> registered_cases();

}  // namespace zdlab::zz
