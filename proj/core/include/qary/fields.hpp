#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qary {

bool is_prime(int n);

/// Arithmetic in the prime field F_q (q prime). Elements are ints in [0, q).
class PrimeField {
public:
    explicit PrimeField(int q);

    int q() const { return q_; }
    int add(int a, int b) const { return (a + b) % q_; }
    int sub(int a, int b) const { return (a - b % q_ + q_) % q_; }
    int neg(int a) const { return (q_ - a % q_) % q_; }
    int mul(int a, int b) const { return (a * b) % q_; }
    int inv(int a) const;

private:
    int q_;
    std::vector<int> inv_;
};

/// Shared immutable PrimeField instances, one per q; cheap to call in hot
/// loops.
const PrimeField& prime_field(int q);

/// The extension tower F_q < F_{q^m}: prime q, degree m, and the monic
/// modulus polynomial (m+1 coefficients, constant term first).
struct FieldSpec {
    int q = 2;
    int m = 1;
    std::vector<int> modulus;

    bool operator==(const FieldSpec&) const = default;
};

/// Outcome of validating a FieldSpec: the modulus must be irreducible over
/// F_q and the residue class of x must generate the multiplicative group.
struct SpecCheck {
    bool ok = false;
    bool irreducible = false;
    bool primitive = false;
    std::uint64_t order = 0;  // multiplicative order of alpha when defined
    std::string message;
};

/// Element of F_{q^m}, stored as the base-q integer encoding of its
/// coordinate vector over (1, alpha, ..., alpha^{m-1}). Zero iff idx == 0.
struct ExtScalar {
    std::uint32_t idx = 0;

    bool is_zero() const { return idx == 0; }
    auto operator<=>(const ExtScalar&) const = default;
};

/// F_{q^m} with exact table-based arithmetic. Immutable after construction;
/// safe to share across threads.
class ExtField {
public:
    /// Throws std::invalid_argument if the spec fails check().
    explicit ExtField(FieldSpec spec);

    /// Non-throwing validation: irreducibility by trial division,
    /// primitivity by computing the order of alpha.
    static SpecCheck check(const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }
    int q() const { return spec_.q; }
    int m() const { return spec_.m; }
    std::uint32_t size() const { return size_; }
    std::uint32_t group_order() const { return size_ - 1; }

    ExtScalar zero() const { return {}; }
    ExtScalar one() const { return {1}; }
    ExtScalar alpha() const;

    ExtScalar from_coords(const std::vector<int>& coords) const;
    std::vector<int> coords(ExtScalar a) const;
    /// Embed c in F_q as the constant-coordinate element.
    ExtScalar from_base(int c) const;
    /// The constant coordinate if all others vanish, else nullopt semantics
    /// via the bool; used to recognise F_q-rational scalars.
    bool in_base(ExtScalar a, int* c = nullptr) const;

    ExtScalar add(ExtScalar a, ExtScalar b) const;
    ExtScalar sub(ExtScalar a, ExtScalar b) const;
    ExtScalar neg(ExtScalar a) const;
    ExtScalar mul(ExtScalar a, ExtScalar b) const;
    ExtScalar mul_base(int c, ExtScalar a) const;
    ExtScalar inv(ExtScalar a) const;  // throws on zero
    ExtScalar div(ExtScalar a, ExtScalar b) const;

    ExtScalar alpha_pow(std::uint64_t k) const;
    std::uint32_t dlog(ExtScalar a) const;  // throws on zero

    /// The anchor vector u = (1, alpha, ..., alpha^{m-1}).
    std::vector<ExtScalar> u_vector() const;

    std::string to_power_string(ExtScalar a) const;  // "0" or "a^k"
    std::string to_coord_string(ExtScalar a) const;  // "(c0,...,c_{m-1})"
    /// Accepts "0", "1", "a", "a^k".
    ExtScalar parse_scalar(const std::string& text) const;

private:
    FieldSpec spec_;
    PrimeField base_;
    std::uint32_t size_ = 0;
    std::vector<std::uint32_t> exp_;  // exp_[k] = alpha^k, k in [0, q^m-1)
    std::vector<std::uint32_t> log_;  // log_[idx] = k, log_[0] unused
};

/// Built-in default moduli for (q=2, m<=5) and (q=3, m<=3). Throws when no
/// default is shipped for (q, m).
FieldSpec default_field_spec(int q, int m);

/// Text form `field q=<q> m=<m> modulus=<c0>,<c1>,...,<cm>`.
std::string format_field_spec(const FieldSpec& spec);
FieldSpec parse_field_spec(const std::string& line);

}  // namespace qary
