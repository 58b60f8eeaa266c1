#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "unicyclic/graph.hpp"

namespace unicyclic {

/// Quantities attached to a maximum-degree restriction (n, Delta).
struct DeltaQuantities {
  int q;  // floor(n / (Delta - 1))
  int r;  // n - q (Delta - 1) + 1
  int s;  // n - Delta + 1
  /// q == 1 or n == 2 Delta - 2: the extremal sequence is (Delta, s, 2, 1, ..., 1).
  bool two_hub_case;
};

/// Quantities attached to a pendant restriction (n, p).
struct PendantQuantities {
  int m;  // floor((2n - p) / (n - p))
  int t;  // 2n - p - m (n - p)
};

/// Throws ParameterError unless n >= 4 and 3 <= Delta <= n - 1.
DeltaQuantities delta_quantities(int n, int max_degree);

/// Throws ParameterError unless n >= 4 and 1 <= p <= n - 3.
PendantQuantities pendant_quantities(int n, int pendants);

namespace family {
struct Cycle {
  int n;
};
struct UnThree {
  int n;
};
struct H {
  int n;
  int max_degree;
};
struct K {
  int n;
  int max_degree;
};
struct SeqA {
  int n;
  int pendants;
};
struct SeqB {
  int n;
  int pendants;
};
}  // namespace family

/// Extremal set descriptor. Only parameters are stored; q, r, s, m, t are
/// recomputed on demand.
using ExtremalFamily =
    std::variant<family::Cycle, family::UnThree, family::H, family::K, family::SeqA, family::SeqB>;

std::string to_string(const ExtremalFamily& fam);

/// Throws ParameterError when the family's parameters are out of range.
void validate(const ExtremalFamily& fam);

/// The degree sequence characterizing the family.
DegreeSequence defining_sequence(const ExtremalFamily& fam);

/// Unicyclic and degree sequence equals defining_sequence(fam).
bool is_member(const Graph& g, const ExtremalFamily& fam);

Graph build_cycle(int n);

/// C_3 with n - 3 pendant edges on one vertex.
Graph build_un3(int n);

/// (Delta, 2 x (n - Delta + 1), 1 x (Delta - 2)).
DegreeSequence y_sequence(int n, int max_degree);

/// (Delta, s, 2, 1 x (n - 3)) when q == 1 or n == 2 Delta - 2, otherwise
/// (Delta x q, r, 1 x (n - q - 1)).
DegreeSequence z_sequence(int n, int max_degree);

/// ((m+1) x t, m x (n - p - t), 1 x p).
DegreeSequence a_sequence(int n, int pendants);

/// (p + 2, 2 x (n - p - 1), 1 x p).
DegreeSequence b_sequence(int n, int pendants);

/// Cycle C_k with Delta - 2 paths hanging from one cycle vertex. Every path
/// length must be >= 1 and k + sum(lengths) == n.
Graph build_H_member(int n, int max_degree, int cycle_length, std::span<const int> path_lengths);

/// Representative of H(n, Delta): k = 3, one long path and Delta - 3 pendants.
Graph build_H_member(int n, int max_degree);

/// Representative of K(n, Delta).
Graph build_K_member(int n, int max_degree);

/// C_3 with p paths (lengths >= 1, summing to n - 3) on one vertex.
Graph build_b_member(int n, int pendants);

}  // namespace unicyclic
