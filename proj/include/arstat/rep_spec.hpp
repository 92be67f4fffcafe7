#pragma once

#include <optional>
#include <vector>

namespace arstat {

/// Parameters of one Fock representation of the generalized A_r statistics.
///
/// `s` is the statistics sign: +1 for the bosonic kind (unbounded occupation,
/// truncated at `n_max` in code), -1 for the fermionic kind (at most k-1
/// particles in total). `epsilon` is the optional Jacobson scale whose sign
/// must agree with `s`.
struct RepSpec {
    int r = 1;
    int s = 1;
    int k = 2;
    std::optional<double> epsilon;
    std::vector<double> energies;
    std::optional<int> n_max;

    /// k_0 = k - (1+s)/2, the constant term of the structure functions.
    int k0() const noexcept { return k - (1 + s) / 2; }
    bool bosonic() const noexcept { return s == 1; }

    /// Largest total occupation kept in the basis.
    int max_total() const;

    /// Throws InvalidParameter or ConfigError when an invariant is violated.
    void validate() const;
};

/// +1 for positive epsilon, -1 for negative; zero is rejected.
int sign_from_epsilon(double epsilon);

/// Validated spec with unit mode energies unless `energies` is given.
RepSpec make_spec(int r, int s, int k, std::optional<int> n_max = std::nullopt,
                  std::vector<double> energies = {});

}  // namespace arstat
