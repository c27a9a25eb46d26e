#pragma once

#include <cstdint>

namespace anyonkit {

/// How the denominator bound for coboundary solving is chosen.
/// `order`: lcm-denominator(input) * |A|.  `exponent`: lcm-denominator(input) * exp(A).
enum class ModulusPolicy { order, exponent };

/// Size limits and solver policy. Every operation that can blow up takes one of these.
struct Config {
  std::int64_t element_cap = 4096;              // enumerate_elements
  std::int64_t automorphism_cap = 64;           // |A| for enumerate_automorphisms
  std::int64_t automorphism_count_cap = 1000000;
  std::int64_t equivalence_cap = 256;           // |A| for isomorphism search
  std::int64_t table_cap = 10000000;            // entries of a dense cochain table
  std::int64_t decompose_cap = 256;             // |A| for prime_decompose
  std::int64_t linear_system_cap = 50000000;    // dense rows * columns
  std::int64_t witness_search_cap = 1 << 26;    // kernel size * table size for lex-least witness
  std::int64_t denominator_cap = std::int64_t{1} << 40;
  ModulusPolicy modulus_policy = ModulusPolicy::order;
};

}  // namespace anyonkit
