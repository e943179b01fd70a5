#include "qary/fields.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qary {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(int q) : q_(q) {
    if (!is_prime(q)) throw std::invalid_argument("PrimeField: q must be prime, got " + std::to_string(q));
    inv_.assign(q_, 0);
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (a * b % q_ == 1) { inv_[a] = b; break; }
}

int PrimeField::inv(int a) const {
    a %= q_;
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    return inv_[a];
}

const PrimeField& prime_field(int q) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<PrimeField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, std::make_unique<PrimeField>(q)).first;
    return *it->second;
}

namespace {

// Polynomials over F_q as coefficient vectors, constant term first.
using Poly = std::vector<int>;

int degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

// Remainder of a mod b, b monic of positive degree.
Poly poly_mod(Poly a, const Poly& b, const PrimeField& f) {
    int db = degree(b);
    for (int da = degree(a); da >= db; da = degree(a)) {
        int c = a[da];
        for (int i = 0; i <= db; ++i)
            a[da - db + i] = f.sub(a[da - db + i], f.mul(c, b[i]));
    }
    return a;
}

bool is_monic(const Poly& p) { return !p.empty() && p.back() == 1; }

// Multiply by x and reduce mod the monic modulus: used to walk powers of alpha.
void mul_by_x(std::vector<int>& coords, const Poly& modulus, const PrimeField& f) {
    int m = static_cast<int>(coords.size());
    int carry = coords[m - 1];
    for (int i = m - 1; i > 0; --i) coords[i] = coords[i - 1];
    coords[0] = 0;
    if (carry != 0)
        for (int i = 0; i < m; ++i)
            coords[i] = f.sub(coords[i], f.mul(carry, modulus[i]));
}

std::uint32_t encode(const std::vector<int>& coords, int q) {
    std::uint32_t idx = 0;
    for (int i = static_cast<int>(coords.size()) - 1; i >= 0; --i)
        idx = idx * static_cast<std::uint32_t>(q) + static_cast<std::uint32_t>(coords[i]);
    return idx;
}

std::vector<int> decode(std::uint32_t idx, int q, int m) {
    std::vector<int> coords(m, 0);
    for (int i = 0; i < m; ++i) {
        coords[i] = static_cast<int>(idx % static_cast<std::uint32_t>(q));
        idx /= static_cast<std::uint32_t>(q);
    }
    return coords;
}

}  // namespace

SpecCheck ExtField::check(const FieldSpec& spec) {
    SpecCheck r;
    if (!is_prime(spec.q)) {
        r.message = "q must be prime, got " + std::to_string(spec.q);
        return r;
    }
    if (spec.m < 1) {
        r.message = "m must be >= 1, got " + std::to_string(spec.m);
        return r;
    }
    if (static_cast<int>(spec.modulus.size()) != spec.m + 1) {
        r.message = "modulus must have m+1 coefficients";
        return r;
    }
    for (int c : spec.modulus)
        if (c < 0 || c >= spec.q) {
            r.message = "modulus coefficients must lie in [0, q)";
            return r;
        }
    if (!is_monic(spec.modulus)) {
        r.message = "modulus must be monic";
        return r;
    }
    PrimeField f(spec.q);

    // Trial factorization: any factorization has a monic factor of degree <= m/2.
    for (int d = 1; 2 * d <= spec.m; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(spec.q);
        for (std::uint64_t t = 0; t < count; ++t) {
            Poly cand(d + 1, 0);
            std::uint64_t v = t;
            for (int i = 0; i < d; ++i) { cand[i] = static_cast<int>(v % spec.q); v /= spec.q; }
            cand[d] = 1;
            if (degree(poly_mod(spec.modulus, cand, f)) < 0) {
                std::ostringstream os;
                os << "modulus is reducible: divisible by a monic factor of degree " << d;
                r.message = os.str();
                return r;
            }
        }
    }
    r.irreducible = true;

    std::uint64_t size = 1;
    for (int i = 0; i < spec.m; ++i) size *= static_cast<std::uint64_t>(spec.q);
    if (size > (1ull << 20)) {
        r.message = "field too large for table-based arithmetic (q^m > 2^20)";
        return r;
    }
    std::uint64_t group = size - 1;

    // Order of alpha: walk alpha^k until it returns to 1.
    int alpha1 = spec.m == 1 ? f.neg(spec.modulus[0]) : 0;  // alpha = -c0 when m = 1
    std::vector<int> onev(spec.m, 0), zerov(spec.m, 0);
    onev[0] = 1;
    std::uint64_t order = 0;
    std::vector<int> acc = onev;
    for (std::uint64_t k = 1; k <= group; ++k) {
        if (spec.m == 1) acc[0] = f.mul(acc[0], alpha1);
        else mul_by_x(acc, spec.modulus, f);
        if (acc == zerov) break;  // degenerate (alpha = 0)
        if (acc == onev) { order = k; break; }
    }
    r.order = order;
    if (order != group) {
        std::ostringstream os;
        os << "alpha is not primitive: multiplicative order " << order << " != " << group;
        r.message = os.str();
        return r;
    }
    r.primitive = true;
    r.ok = true;
    r.message = "ok";
    return r;
}

ExtField::ExtField(FieldSpec spec) : spec_(std::move(spec)), base_(is_prime(spec_.q) ? spec_.q : 2) {
    SpecCheck c = check(spec_);
    if (!c.ok) throw std::invalid_argument("ExtField: " + c.message);

    std::uint64_t size = 1;
    for (int i = 0; i < spec_.m; ++i) size *= static_cast<std::uint64_t>(spec_.q);
    size_ = static_cast<std::uint32_t>(size);

    exp_.assign(size_ - 1, 0);
    log_.assign(size_, 0);
    std::vector<int> acc(spec_.m, 0);
    acc[0] = 1;
    int alpha1 = spec_.m == 1 ? base_.neg(spec_.modulus[0]) : 0;
    for (std::uint32_t k = 0; k < size_ - 1; ++k) {
        std::uint32_t idx = encode(acc, spec_.q);
        exp_[k] = idx;
        log_[idx] = k;
        if (spec_.m == 1) acc[0] = base_.mul(acc[0], alpha1);
        else mul_by_x(acc, spec_.modulus, base_);
    }
}

ExtScalar ExtField::alpha() const { return alpha_pow(1); }

ExtScalar ExtField::from_coords(const std::vector<int>& coords) const {
    if (static_cast<int>(coords.size()) != spec_.m)
        throw std::invalid_argument("ExtField::from_coords: expected " + std::to_string(spec_.m) + " coordinates");
    for (int c : coords)
        if (c < 0 || c >= spec_.q) throw std::invalid_argument("ExtField::from_coords: coordinate out of range");
    return {encode(coords, spec_.q)};
}

std::vector<int> ExtField::coords(ExtScalar a) const { return decode(a.idx, spec_.q, spec_.m); }

ExtScalar ExtField::from_base(int c) const {
    c %= spec_.q;
    if (c < 0) c += spec_.q;
    return {static_cast<std::uint32_t>(c)};
}

bool ExtField::in_base(ExtScalar a, int* c) const {
    if (a.idx >= static_cast<std::uint32_t>(spec_.q)) return false;
    if (c) *c = static_cast<int>(a.idx);
    return true;
}

ExtScalar ExtField::add(ExtScalar a, ExtScalar b) const {
    std::uint32_t q = static_cast<std::uint32_t>(spec_.q);
    std::uint32_t out = 0, mult = 1;
    std::uint32_t x = a.idx, y = b.idx;
    for (int i = 0; i < spec_.m; ++i) {
        out += (x % q + y % q) % q * mult;
        x /= q;
        y /= q;
        mult *= q;
    }
    return {out};
}

ExtScalar ExtField::neg(ExtScalar a) const {
    std::uint32_t q = static_cast<std::uint32_t>(spec_.q);
    std::uint32_t out = 0, mult = 1;
    std::uint32_t x = a.idx;
    for (int i = 0; i < spec_.m; ++i) {
        out += (q - x % q) % q * mult;
        x /= q;
        mult *= q;
    }
    return {out};
}

ExtScalar ExtField::sub(ExtScalar a, ExtScalar b) const { return add(a, neg(b)); }

ExtScalar ExtField::mul(ExtScalar a, ExtScalar b) const {
    if (a.is_zero() || b.is_zero()) return {};
    std::uint64_t k = static_cast<std::uint64_t>(log_[a.idx]) + log_[b.idx];
    return {exp_[k % group_order()]};
}

ExtScalar ExtField::mul_base(int c, ExtScalar a) const { return mul(from_base(c), a); }

ExtScalar ExtField::inv(ExtScalar a) const {
    if (a.is_zero()) throw std::domain_error("ExtField: inverse of zero (degenerate divisor)");
    std::uint32_t k = log_[a.idx];
    return {exp_[(group_order() - k) % group_order()]};
}

ExtScalar ExtField::div(ExtScalar a, ExtScalar b) const { return mul(a, inv(b)); }

ExtScalar ExtField::alpha_pow(std::uint64_t k) const { return {exp_[k % group_order()]}; }

std::uint32_t ExtField::dlog(ExtScalar a) const {
    if (a.is_zero()) throw std::domain_error("ExtField: discrete log of zero");
    return log_[a.idx];
}

std::vector<ExtScalar> ExtField::u_vector() const {
    std::vector<ExtScalar> u(spec_.m);
    for (int i = 0; i < spec_.m; ++i) u[i] = alpha_pow(static_cast<std::uint64_t>(i));
    return u;
}

std::string ExtField::to_power_string(ExtScalar a) const {
    if (a.is_zero()) return "0";
    return "a^" + std::to_string(dlog(a));
}

std::string ExtField::to_coord_string(ExtScalar a) const {
    std::vector<int> c = coords(a);
    std::string s = "(";
    for (int i = 0; i < spec_.m; ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    s += ")";
    return s;
}

ExtScalar ExtField::parse_scalar(const std::string& text) const {
    if (text == "0") return zero();
    if (text == "1") return one();
    if (text == "a") return alpha();
    if (text.rfind("a^", 0) == 0) {
        std::size_t pos = 0;
        std::uint64_t k = std::stoull(text.substr(2), &pos);
        if (pos != text.size() - 2) throw std::invalid_argument("bad field entry: " + text);
        return alpha_pow(k);
    }
    throw std::invalid_argument("bad field entry (want 0|1|a|a^k): " + text);
}

FieldSpec default_field_spec(int q, int m) {
    if (q == 2) {
        switch (m) {
            case 1: return {2, 1, {1, 1}};
            case 2: return {2, 2, {1, 1, 1}};
            case 3: return {2, 3, {1, 1, 0, 1}};
            case 4: return {2, 4, {1, 1, 0, 0, 1}};
            case 5: return {2, 5, {1, 0, 1, 0, 0, 1}};
        }
    } else if (q == 3) {
        switch (m) {
            case 1: return {3, 1, {1, 1}};
            case 2: return {3, 2, {2, 1, 1}};
            case 3: return {3, 3, {1, 2, 0, 1}};
        }
    }
    throw std::invalid_argument("no built-in modulus for q=" + std::to_string(q) + " m=" + std::to_string(m) +
                                "; pass an explicit field spec");
}

std::string format_field_spec(const FieldSpec& spec) {
    std::ostringstream os;
    os << "field q=" << spec.q << " m=" << spec.m << " modulus=";
    for (std::size_t i = 0; i < spec.modulus.size(); ++i) {
        if (i) os << ",";
        os << spec.modulus[i];
    }
    return os.str();
}

FieldSpec parse_field_spec(const std::string& line) {
    std::istringstream is(line);
    std::string tag, qtok, mtok, modtok;
    is >> tag >> qtok >> mtok >> modtok;
    std::string rest;
    if (tag != "field" || qtok.rfind("q=", 0) != 0 || mtok.rfind("m=", 0) != 0 ||
        modtok.rfind("modulus=", 0) != 0 || (is >> rest))
        throw std::invalid_argument("bad field spec line (want `field q=<q> m=<m> modulus=<c0>,...`): " + line);
    FieldSpec spec;
    spec.q = std::stoi(qtok.substr(2));
    spec.m = std::stoi(mtok.substr(2));
    std::istringstream cs(modtok.substr(8));
    std::string item;
    while (std::getline(cs, item, ',')) spec.modulus.push_back(std::stoi(item));
    return spec;
}

}  // namespace qary
