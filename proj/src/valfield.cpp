#include "nevan/valfield.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace nevan {

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- LogValue

const Rational& LogValue::value() const {
    if (!value_) throw InputError("LogValue: -infinity has no finite value");
    return *value_;
}

LogValue operator+(const LogValue& a, const LogValue& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return LogValue::neg_inf();
    return LogValue(Rational(*a.value_ + *b.value_));
}

LogValue operator-(const LogValue& a, const LogValue& b) {
    if (b.is_neg_inf()) throw InputError("LogValue: subtracting -infinity");
    if (a.is_neg_inf()) return LogValue::neg_inf();
    return LogValue(Rational(*a.value_ - *b.value_));
}

bool operator==(const LogValue& a, const LogValue& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return a.is_neg_inf() == b.is_neg_inf();
    return *a.value_ == *b.value_;
}

bool operator<(const LogValue& a, const LogValue& b) {
    if (b.is_neg_inf()) return false;
    if (a.is_neg_inf()) return true;
    return *a.value_ < *b.value_;
}

LogValue max(const LogValue& a, const LogValue& b) { return a < b ? b : a; }

std::string LogValue::str() const { return value_ ? value_->get_str() : "-inf"; }

// ---------------------------------------------------------------- FpPoly

namespace {

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t reduce_signed(std::int64_t c, std::uint32_t p) {
    std::int64_t r = c % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

void require_same_prime(std::uint32_t a, std::uint32_t b) {
    if (a != b) throw InputError("F_p(t): operands over different primes");
}

}  // namespace

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw DivisionByZero();
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return reduce_signed(t, p);
}

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= p_;
    trim();
}

FpPoly FpPoly::constant(std::uint32_t p, std::int64_t c) { return FpPoly(p, {reduce_signed(c, p)}); }

FpPoly FpPoly::monomial(std::uint32_t p, std::size_t deg, std::uint32_t c) {
    std::vector<std::uint32_t> v(deg + 1, 0);
    v[deg] = c % p;
    return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long FpPoly::valuation() const {
    if (is_zero()) throw InputError("valuation of the zero polynomial");
    long i = 0;
    while (c_[i] == 0) ++i;
    return i;
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    require_same_prime(p_, o.p_);
    std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t s = (i < c_.size() ? c_[i] : 0) + static_cast<std::uint64_t>(i < o.c_.size() ? o.c_[i] : 0);
        r[i] = static_cast<std::uint32_t>(s % p_);
    }
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-() const {
    std::vector<std::uint32_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] == 0 ? 0 : p_ - c_[i];
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const { return *this + (-o); }

FpPoly FpPoly::operator*(const FpPoly& o) const {
    require_same_prime(p_, o.p_);
    if (is_zero() || o.is_zero()) return FpPoly(p_, {});
    std::vector<std::uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(c_[i]) * o.c_[j]) % p_;
        }
    }
    std::vector<std::uint32_t> r(acc.begin(), acc.end());
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::scaled(std::uint32_t c) const {
    std::vector<std::uint32_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = mulmod(c_[i], c % p_, p_);
    return FpPoly(p_, std::move(r));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& o) const {
    require_same_prime(p_, o.p_);
    if (o.is_zero()) throw DivisionByZero();
    std::vector<std::uint32_t> rem = c_;
    if (rem.size() < o.c_.size()) return {FpPoly(p_, {}), *this};
    std::vector<std::uint32_t> quo(rem.size() - o.c_.size() + 1, 0);
    const std::uint32_t inv_lead = fp_inverse(o.lead(), p_);
    for (std::size_t k = quo.size(); k-- > 0;) {
        std::uint32_t coef = mulmod(rem[k + o.c_.size() - 1], inv_lead, p_);
        quo[k] = coef;
        if (coef == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            std::uint32_t sub = mulmod(coef, o.c_[j], p_);
            rem[k + j] = (rem[k + j] + p_ - sub) % p_;
        }
    }
    return {FpPoly(p_, std::move(quo)), FpPoly(p_, std::move(rem))};
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(fp_inverse(lead(), p_));
}

std::optional<FpPoly> FpPoly::deflate(std::uint64_t q) const {
    std::vector<std::uint32_t> r;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (i % q != 0) return std::nullopt;
    }
    if (!c_.empty()) r.resize((c_.size() - 1) / q + 1, 0);
    for (std::size_t i = 0; i < c_.size(); i += q) r[i / q] = c_[i];
    return FpPoly(p_, std::move(r));
}

FpPoly gcd(FpPoly a, FpPoly b) {
    require_same_prime(a.prime(), b.prime());
    while (!b.is_zero()) {
        FpPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---------------------------------------------------------------- TadicElem

TadicElem::TadicElem(FpPoly num, FpPoly den) {
    require_same_prime(num.prime(), den.prime());
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) {
        num_ = std::move(num);
        den_ = FpPoly::constant(den.prime(), 1);
        return;
    }
    FpPoly g = gcd(num, den);
    num = num.divmod(g).first;
    den = den.divmod(g).first;
    std::uint32_t inv = fp_inverse(den.lead(), den.prime());
    num_ = num.scaled(inv);
    den_ = den.scaled(inv);
}

TadicElem TadicElem::raw(FpPoly num, FpPoly den) {
    TadicElem e;
    e.num_ = std::move(num);
    e.den_ = std::move(den);
    return e;
}

bool TadicElem::is_reduced() const {
    if (den_.is_zero() || den_.lead() != 1) return false;
    if (num_.is_zero()) return den_.degree() == 0;
    return gcd(num_, den_).degree() == 0;
}

// ---------------------------------------------------------------- Scalar

namespace {

[[noreturn]] void mixed() { throw InputError("arithmetic on elements of different fields"); }

TadicElem tadd(const TadicElem& a, const TadicElem& b) {
    return TadicElem(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

TadicElem tmul(const TadicElem& a, const TadicElem& b) {
    return TadicElem(a.num() * b.num(), a.den() * b.den());
}

}  // namespace

const Rational& Scalar::rational() const {
    if (!is_rational()) throw InputError("scalar is not a rational");
    return std::get<Rational>(v_);
}

const TadicElem& Scalar::tadic() const {
    if (!is_tadic()) throw InputError("scalar is not an element of F_p(t)");
    return std::get<TadicElem>(v_);
}

bool Scalar::is_zero() const {
    return is_rational() ? sgn(std::get<Rational>(v_)) == 0 : std::get<TadicElem>(v_).is_zero();
}

bool Scalar::is_one() const {
    if (is_rational()) return std::get<Rational>(v_) == 1;
    const auto& e = std::get<TadicElem>(v_);
    return e.den().degree() == 0 && e.num().degree() == 0 && e.num().lead() == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_rational() != o.is_rational()) mixed();
    if (is_rational()) return Scalar(Rational(rational() + o.rational()));
    return Scalar(tadd(tadic(), o.tadic()));
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(Rational(-rational()));
    return Scalar(TadicElem(-tadic().num(), tadic().den()));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_rational() != o.is_rational()) mixed();
    if (is_rational()) return Scalar(Rational(rational() * o.rational()));
    return Scalar(tmul(tadic(), o.tadic()));
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return Scalar(Rational(1 / rational()));
    return Scalar(TadicElem(tadic().den(), tadic().num()));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

bool Scalar::operator==(const Scalar& o) const {
    if (is_rational() != o.is_rational()) return false;
    if (is_rational()) return rational() == o.rational();
    return tadic() == o.tadic();
}

namespace {

std::string fp_str(const FpPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
        if (i > 0) {
            if (c[i] != 1) out += "*";
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace

std::string Scalar::str() const {
    if (is_rational()) return rational().get_str();
    const auto& e = tadic();
    bool den_one = e.den().degree() == 0;
    std::string n = fp_str(e.num());
    if (den_one) return n;
    bool n_simple = e.num().is_zero() || (e.num().degree() <= 0) ||
                    std::count_if(e.num().coeffs().begin(), e.num().coeffs().end(),
                                  [](std::uint32_t c) { return c != 0; }) == 1;
    if (!n_simple) n = "(" + n + ")";
    return n + "/(" + fp_str(e.den()) + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

// ---------------------------------------------------------------- Field

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long padic_valuation(const Rational& q, std::uint32_t p) {
    if (sgn(q) == 0) throw InputError("valuation of zero");
    long v = 0;
    Integer n = q.get_num(), d = q.get_den();
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        n /= p;
        ++v;
    }
    while (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
        d /= p;
        --v;
    }
    return v;
}

Field::Field(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {
    if (!is_prime(p)) throw InputError("field prime " + std::to_string(p) + " is not prime");
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
    if (kind_ == FieldKind::padic) return Scalar(Rational(static_cast<long>(n)));
    return Scalar(TadicElem(FpPoly::constant(p_, n), FpPoly::constant(p_, 1)));
}

Scalar Field::from_integer(const Integer& n) const {
    if (kind_ == FieldKind::padic) return Scalar(Rational(n));
    Integer r = n % p_;
    if (r < 0) r += p_;
    return from_int(static_cast<std::int64_t>(r.get_ui()));
}

Scalar Field::from_rational(const Rational& q) const {
    if (kind_ == FieldKind::padic) return Scalar(q);
    return from_integer(q.get_num()) / from_integer(q.get_den());
}

Scalar Field::t() const {
    if (kind_ != FieldKind::tadic) throw InputError("t is only defined for tadic fields");
    return Scalar(TadicElem(FpPoly::monomial(p_, 1), FpPoly::constant(p_, 1)));
}

bool Field::contains(const Scalar& x) const {
    if (kind_ == FieldKind::padic) {
        if (!x.is_rational()) return false;
        const Rational& q = x.rational();
        return sgn(q.get_den()) > 0 && gcd(q.get_num(), q.get_den()) == 1;
    }
    if (!x.is_tadic()) return false;
    return x.tadic().prime() == p_ && x.tadic().den().prime() == p_ && x.tadic().is_reduced();
}

void Field::require(const Scalar& x) const {
    if (!contains(x)) throw InputError("element " + x.str() + " is not a reduced element of " + str());
}

LogValue Field::logabs(const Scalar& x) const {
    require(x);
    if (x.is_zero()) return LogValue::neg_inf();
    if (kind_ == FieldKind::padic) return LogValue(Rational(-padic_valuation(x.rational(), p_)));
    const auto& e = x.tadic();
    return LogValue(Rational(e.den().valuation() - e.num().valuation()));
}

std::optional<Scalar> Field::pth_power_root(const Scalar& x, std::uint64_t q) const {
    require(x);
    if (q == 1) return x;
    if (kind_ != FieldKind::tadic) throw InputError("p-th power roots are taken in characteristic p only");
    auto n = x.tadic().num().deflate(q);
    auto d = x.tadic().den().deflate(q);
    if (!n || !d) return std::nullopt;
    return Scalar(TadicElem(*n, *d));
}

Scalar Field::random_element(std::mt19937_64& rng, int spread) const {
    spread = std::max(spread, 1);
    if (kind_ == FieldKind::padic) {
        std::uniform_int_distribution<long> num(-4L * spread, 4L * spread);
        std::uniform_int_distribution<long> den(1, 2L * spread);
        std::uniform_int_distribution<int> pw(-spread, spread);
        Rational q(num(rng), den(rng));
        int e = pw(rng);
        Integer pp;
        mpz_ui_pow_ui(pp.get_mpz_t(), p_, static_cast<unsigned long>(std::abs(e)));
        q = e >= 0 ? Rational(q * pp) : Rational(q / pp);
        q.canonicalize();
        return Scalar(q);
    }
    std::uniform_int_distribution<std::uint32_t> coef(0, p_ - 1);
    std::uniform_int_distribution<int> deg(0, spread);
    auto rand_poly = [&](bool nonzero) {
        for (;;) {
            std::vector<std::uint32_t> c(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& v : c) v = coef(rng);
            FpPoly f(p_, std::move(c));
            if (!nonzero || !f.is_zero()) return f;
        }
    };
    FpPoly n = rand_poly(false);
    FpPoly d = rand_poly(true);
    std::uniform_int_distribution<int> shift(0, spread);
    d = d * FpPoly::monomial(p_, static_cast<std::size_t>(shift(rng)));
    return Scalar(TadicElem(n, d));
}

std::string Field::str() const {
    return (kind_ == FieldKind::padic ? "padic(p=" : "tadic(p=") + std::to_string(p_) + ")";
}

}  // namespace nevan
