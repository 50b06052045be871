#include "arclift/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace arclift {

namespace detail {

struct RingData {
    RingDescriptor descriptor;
    bool rational_coefficients = false;  // coefficients live in Q
    std::int64_t coefficient_modulus = 0;  // otherwise reduced mod this

    bool local = true;
    std::int64_t residue_prime = 0;  // 0 for characteristic 0
    int nilpotency = 1;

    std::vector<Exponents> basis;       // degree-then-lex
    std::vector<int> product;           // basis.size()^2, -1 when truncated away
    std::shared_ptr<const RingData> residue;  // null when the ring is its own residue field
};

}  // namespace detail

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// (p, k) with n = p^k, or nullopt.
std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t n) {
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (n != 1) return std::nullopt;
        return std::make_pair(p, k);
    }
    return std::make_pair(n, 1);
}

std::int64_t mod_normalize(std::int64_t v, std::int64_t m) {
    v %= m;
    return v < 0 ? v + m : v;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

// Inverse of a modulo m, or nullopt if gcd(a, m) != 1.
std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t r0 = m, r1 = mod_normalize(a, m);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    if (r0 != 1) return std::nullopt;
    return mod_normalize(s0, m);
}

// All exponent vectors of total degree < e, degree-then-lex (x1 > x2 > ...).
std::vector<Exponents> truncated_monomials(std::size_t nvars, int e) {
    std::vector<Exponents> out;
    for (int deg = 0; deg < e; ++deg) {
        Exponents cur(nvars, 0);
        // Lex-descending enumeration of compositions of deg.
        std::vector<Exponents> level;
        auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
            if (pos + 1 == nvars) {
                cur[pos] = left;
                level.push_back(cur);
                return;
            }
            for (std::int64_t k = left; k >= 0; --k) {
                cur[pos] = static_cast<std::uint32_t>(k);
                self(self, pos + 1, left - static_cast<std::uint32_t>(k));
            }
        };
        if (nvars == 0) {
            if (deg == 0) out.push_back({});
            continue;
        }
        rec(rec, 0, static_cast<std::uint32_t>(deg));
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::string descriptor_string(const RingDescriptor& d) {
    switch (d.kind) {
        case RingKind::prime_field: return "Fp(" + std::to_string(d.modulus) + ")";
        case RingKind::rationals: return "Q";
        case RingKind::modular_ints: return "Zmod(" + std::to_string(d.modulus) + ")";
        case RingKind::artinian_local: {
            std::string s = "Artin(";
            s += d.modulus == 0 ? "Q" : "Fp(" + std::to_string(d.modulus) + ")";
            s += "; ";
            for (std::size_t i = 0; i < d.generators.size(); ++i) {
                if (i) s += ", ";
                s += d.generators[i];
            }
            s += "; " + std::to_string(d.truncation_order) + ")";
            return s;
        }
    }
    return "?";
}

std::shared_ptr<detail::RingData> build(const RingDescriptor& d) {
    auto data = std::make_shared<detail::RingData>();
    data->descriptor = d;
    auto invalid = [&](const std::string& why) {
        return Error(ErrorKind::invalid_descriptor, why, descriptor_string(d));
    };
    switch (d.kind) {
        case RingKind::prime_field:
            if (!is_prime(d.modulus)) throw invalid("modulus is not prime");
            if (d.modulus > (std::int64_t{1} << 62)) throw invalid("modulus too large");
            data->coefficient_modulus = d.modulus;
            data->residue_prime = d.modulus;
            data->basis = {Exponents{}};
            break;
        case RingKind::rationals:
            data->rational_coefficients = true;
            data->basis = {Exponents{}};
            break;
        case RingKind::modular_ints: {
            if (d.modulus < 2) throw invalid("modulus must be at least 2");
            if (d.modulus > (std::int64_t{1} << 62)) throw invalid("modulus too large");
            data->coefficient_modulus = d.modulus;
            data->basis = {Exponents{}};
            if (auto pk = prime_power(d.modulus)) {
                data->residue_prime = pk->first;
                data->nilpotency = pk->second;
                if (pk->second > 1) {
                    auto res = std::make_shared<detail::RingData>();
                    res->descriptor = RingDescriptor::prime_field(pk->first);
                    res->coefficient_modulus = pk->first;
                    res->residue_prime = pk->first;
                    res->basis = {Exponents{}};
                    data->residue = res;
                }
            } else {
                data->local = false;
            }
            break;
        }
        case RingKind::artinian_local: {
            if (d.truncation_order < 1) throw invalid("truncation order must be at least 1");
            if (d.modulus != 0 && !is_prime(d.modulus)) throw invalid("base modulus is not prime");
            std::set<std::string> seen;
            for (const auto& g : d.generators) {
                if (g.empty()) throw invalid("empty generator name");
                if (!seen.insert(g).second) throw invalid("duplicate generator " + g);
            }
            data->rational_coefficients = d.modulus == 0;
            data->coefficient_modulus = d.modulus;
            data->residue_prime = d.modulus;
            data->nilpotency = d.truncation_order;
            data->basis = truncated_monomials(d.generators.size(), d.truncation_order);
            // m^e = 0 with m = 0 when there are no generators; keep e = 1 then.
            if (d.generators.empty()) data->nilpotency = 1;
            const std::size_t n = data->basis.size();
            std::map<Exponents, int> index;
            for (std::size_t i = 0; i < n; ++i) index[data->basis[i]] = static_cast<int>(i);
            data->product.assign(n * n, -1);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Exponents s(d.generators.size());
                    for (std::size_t k = 0; k < s.size(); ++k)
                        s[k] = data->basis[i][k] + data->basis[j][k];
                    auto it = index.find(s);
                    if (it != index.end()) data->product[i * n + j] = it->second;
                }
            auto res = std::make_shared<detail::RingData>();
            res->descriptor = d.modulus == 0 ? RingDescriptor::rationals()
                                             : RingDescriptor::prime_field(d.modulus);
            res->rational_coefficients = d.modulus == 0;
            res->coefficient_modulus = d.modulus;
            res->residue_prime = d.modulus;
            res->basis = {Exponents{}};
            data->residue = res;
            break;
        }
    }
    return data;
}

}  // namespace

RingDescriptor RingDescriptor::prime_field(std::int64_t p) {
    RingDescriptor d;
    d.kind = RingKind::prime_field;
    d.modulus = p;
    return d;
}

RingDescriptor RingDescriptor::rationals() { return RingDescriptor{}; }

RingDescriptor RingDescriptor::modular_ints(std::int64_t n) {
    RingDescriptor d;
    d.kind = RingKind::modular_ints;
    d.modulus = n;
    return d;
}

RingDescriptor RingDescriptor::artinian(const RingDescriptor& base,
                                        std::vector<std::string> generators, int truncation_order) {
    if (base.kind != RingKind::prime_field && base.kind != RingKind::rationals)
        throw Error(ErrorKind::invalid_descriptor, "Artinian base must be Fp(p) or Q");
    RingDescriptor d;
    d.kind = RingKind::artinian_local;
    d.modulus = base.kind == RingKind::rationals ? 0 : base.modulus;
    d.generators = std::move(generators);
    d.truncation_order = truncation_order;
    return d;
}

// ---------------------------------------------------------------- Ring

Ring::Ring(const RingDescriptor& descriptor) : data_(build(descriptor)) {}

const RingDescriptor& Ring::descriptor() const {
    if (!data_) throw Error(ErrorKind::invalid_argument, "use of an empty ring handle");
    return data_->descriptor;
}

RingElement Ring::zero() const {
    RingElement e;
    e.ring_ = *this;
    const std::size_t n = basis().size();
    if (data_->rational_coefficients)
        e.rat_.assign(n, mpq_class(0));
    else
        e.fin_.assign(n, 0);
    return e;
}

RingElement Ring::one() const { return from_int(1); }

RingElement Ring::from_int(std::int64_t value) const { return from_integer(mpz_class(value)); }

RingElement Ring::from_integer(const mpz_class& value) const {
    RingElement e = zero();
    if (data_->rational_coefficients) {
        e.rat_[0] = value;
    } else {
        mpz_class r = value % data_->coefficient_modulus;
        if (r < 0) r += data_->coefficient_modulus;
        e.fin_[0] = r.get_si();
    }
    return e;
}

RingElement Ring::from_rational(const mpq_class& raw) const {
    mpq_class value = raw;
    value.canonicalize();
    if (value.get_den() == 0) throw Error(ErrorKind::not_a_unit, "zero denominator");
    if (data_->rational_coefficients) {
        RingElement e = zero();
        e.rat_[0] = value;
        return e;
    }
    RingElement den = from_integer(value.get_den());
    return from_integer(value.get_num()) * invert(den);
}

RingElement Ring::generator(std::size_t index) const {
    const auto& d = descriptor();
    if (d.kind != RingKind::artinian_local || index >= d.generators.size())
        throw Error(ErrorKind::invalid_argument, "no generator with index " + std::to_string(index));
    RingElement e = zero();
    // Degree-one monomials follow the constant in lex-descending order.
    if (d.truncation_order < 2) return e;
    const std::size_t slot = 1 + index;
    if (data_->rational_coefficients)
        e.rat_[slot] = 1;
    else
        e.fin_[slot] = 1;
    return e;
}

std::optional<std::size_t> Ring::generator_index(const std::string& name) const {
    const auto& g = descriptor().generators;
    auto it = std::find(g.begin(), g.end(), name);
    if (it == g.end()) return std::nullopt;
    return static_cast<std::size_t>(it - g.begin());
}

bool Ring::is_field() const {
    return kind() == RingKind::prime_field || kind() == RingKind::rationals;
}

bool Ring::is_local() const { return descriptor(), data_->local; }

int Ring::nilpotency_index() const {
    if (!is_local())
        throw Error(ErrorKind::non_local_ring, "Z/n with n not a prime power", to_string());
    return data_->nilpotency;
}

Ring Ring::residue_field() const {
    if (!is_local())
        throw Error(ErrorKind::non_local_ring, "Z/n with n not a prime power", to_string());
    if (!data_->residue) return *this;
    Ring r;
    r.data_ = data_->residue;
    return r;
}

std::int64_t Ring::residue_characteristic() const {
    if (!is_local())
        throw Error(ErrorKind::non_local_ring, "Z/n with n not a prime power", to_string());
    return data_->residue_prime;
}

std::optional<mpz_class> Ring::cardinality() const {
    if (data_->rational_coefficients) return std::nullopt;
    mpz_class c;
    mpz_ui_pow_ui(c.get_mpz_t(), static_cast<unsigned long>(data_->coefficient_modulus),
                  static_cast<unsigned long>(basis().size()));
    return c;
}

const std::vector<Exponents>& Ring::basis() const {
    descriptor();
    return data_->basis;
}

std::string Ring::to_string() const { return descriptor_string(descriptor()); }

bool operator==(const Ring& a, const Ring& b) {
    if (a.data_ == b.data_) return true;
    if (!a.data_ || !b.data_) return false;
    return a.data_->descriptor == b.data_->descriptor;
}

// ---------------------------------------------------------------- elements

void RingElement::check_same_ring(const RingElement& b) const {
    if (!(ring_ == b.ring_))
        throw Error(ErrorKind::mixed_rings, "operands from different rings",
                    (ring_.valid() ? ring_.to_string() : "<none>") + " vs " +
                        (b.ring_.valid() ? b.ring_.to_string() : "<none>"));
}

bool RingElement::is_zero() const {
    for (auto v : fin_)
        if (v != 0) return false;
    for (const auto& v : rat_)
        if (v != 0) return false;
    return true;
}

bool RingElement::is_one() const { return ring_.valid() && *this == ring_.one(); }

RingElement RingElement::basis_coefficient(std::size_t index) const {
    if (ring_.kind() != RingKind::artinian_local) {
        if (index != 0) return ring_.zero();
        return *this;
    }
    Ring base = ring_.residue_field();
    RingElement c = base.zero();
    if (!rat_.empty())
        c.rat_[0] = rat_.at(index);
    else
        c.fin_[0] = fin_.at(index);
    return c;
}

bool RingElement::prints_negative() const {
    for (const auto& v : rat_)
        if (v != 0) return v < 0;
    return false;
}

RingElement& RingElement::operator+=(const RingElement& b) {
    check_same_ring(b);
    const auto m = ring_.data_->coefficient_modulus;
    for (std::size_t i = 0; i < fin_.size(); ++i) {
        fin_[i] += b.fin_[i];
        if (fin_[i] >= m) fin_[i] -= m;
    }
    for (std::size_t i = 0; i < rat_.size(); ++i) rat_[i] += b.rat_[i];
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& b) {
    check_same_ring(b);
    const auto m = ring_.data_->coefficient_modulus;
    for (std::size_t i = 0; i < fin_.size(); ++i) {
        fin_[i] -= b.fin_[i];
        if (fin_[i] < 0) fin_[i] += m;
    }
    for (std::size_t i = 0; i < rat_.size(); ++i) rat_[i] -= b.rat_[i];
    return *this;
}

RingElement& RingElement::operator*=(const RingElement& b) {
    check_same_ring(b);
    const auto& data = *ring_.data_;
    const std::size_t n = data.basis.size();
    if (n == 1) {
        if (!fin_.empty())
            fin_[0] = mod_mul(fin_[0], b.fin_[0], data.coefficient_modulus);
        else
            rat_[0] *= b.rat_[0];
        return *this;
    }
    if (!fin_.empty()) {
        std::vector<std::int64_t> out(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (fin_[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const int k = data.product[i * n + j];
                if (k < 0 || b.fin_[j] == 0) continue;
                out[k] = (out[k] + mod_mul(fin_[i], b.fin_[j], data.coefficient_modulus)) %
                         data.coefficient_modulus;
            }
        }
        fin_ = std::move(out);
    } else {
        std::vector<mpq_class> out(n, mpq_class(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (rat_[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const int k = data.product[i * n + j];
                if (k < 0 || b.rat_[j] == 0) continue;
                out[k] += rat_[i] * b.rat_[j];
            }
        }
        rat_ = std::move(out);
    }
    return *this;
}

RingElement operator-(const RingElement& a) { return a.ring_.zero() - a; }

bool operator==(const RingElement& a, const RingElement& b) {
    if (!(a.ring_ == b.ring_)) return false;
    return a.fin_ == b.fin_ && a.rat_ == b.rat_;
}

bool is_unit(const RingElement& a) {
    const auto& data = *a.ring_.data_;
    switch (data.descriptor.kind) {
        case RingKind::prime_field:
        case RingKind::rationals: return !a.is_zero();
        case RingKind::modular_ints:
            return std::gcd(a.fin_[0], data.coefficient_modulus) == 1;
        case RingKind::artinian_local:
            return data.rational_coefficients ? a.rat_[0] != 0 : a.fin_[0] != 0;
    }
    return false;
}

RingElement invert(const RingElement& a) {
    if (!is_unit(a)) throw Error(ErrorKind::not_a_unit, "element is not invertible", to_string(a));
    const auto& data = *a.ring_.data_;
    RingElement out = a.ring_.zero();
    if (data.descriptor.kind != RingKind::artinian_local) {
        if (!a.fin_.empty())
            out.fin_[0] = *mod_inverse(a.fin_[0], data.coefficient_modulus);
        else
            out.rat_[0] = 1 / a.rat_[0];
        return out;
    }
    // a = c + nu with nu nilpotent: a^-1 = c^-1 * sum_{k<e} (-c^-1 nu)^k.
    RingElement c_inv = a.ring_.zero();
    if (!a.fin_.empty())
        c_inv.fin_[0] = *mod_inverse(a.fin_[0], data.coefficient_modulus);
    else
        c_inv.rat_[0] = 1 / a.rat_[0];
    RingElement nu = a;
    if (!nu.fin_.empty())
        nu.fin_[0] = 0;
    else
        nu.rat_[0] = 0;
    const RingElement step = -(c_inv * nu);
    RingElement term = a.ring_.one();
    RingElement sum = a.ring_.zero();
    for (int k = 0; k < data.nilpotency; ++k) {
        sum += term;
        term *= step;
    }
    return c_inv * sum;
}

RingElement residue(const RingElement& a) {
    Ring k = a.ring_.residue_field();
    RingElement out = k.zero();
    const auto& data = *a.ring_.data_;
    if (data.descriptor.kind == RingKind::modular_ints) {
        out.fin_[0] = a.fin_[0] % data.residue_prime;
    } else if (!a.fin_.empty()) {
        out.fin_[0] = a.fin_[0];
    } else {
        out.rat_[0] = a.rat_[0];
    }
    return out;
}

bool is_nilpotent(const RingElement& a) { return residue(a).is_zero(); }

RingElement pow(const RingElement& a, std::uint64_t exponent) {
    RingElement result = a.ring().one();
    RingElement base = a;
    while (exponent) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

namespace {

std::string coefficient_string(const RingElement& c) {
    // c is a base-field element (single coefficient).
    return to_string(c);
}

std::string monomial_string(const Exponents& e, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

}  // namespace

std::string to_string(const RingElement& a) {
    if (!a.ring_.valid()) return "<none>";
    const auto& data = *a.ring_.data_;
    if (data.descriptor.kind != RingKind::artinian_local) {
        if (!a.fin_.empty()) return std::to_string(a.fin_[0]);
        return a.rat_[0].get_str();
    }
    std::string out;
    for (std::size_t i = 0; i < data.basis.size(); ++i) {
        RingElement c = a.basis_coefficient(i);
        if (c.is_zero()) continue;
        bool negative = c.prints_negative();
        if (negative) c = -c;
        std::string mono = monomial_string(data.basis[i], data.descriptor.generators);
        std::string coef = coefficient_string(c);
        std::string term;
        if (mono.empty())
            term = coef;
        else if (coef == "1")
            term = mono;
        else
            term = coef + "*" + mono;
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace arclift
