#include "waring/bigapprox.hpp"

#include <cctype>
#include <cstdlib>
#include <utility>

namespace waring {

Mpfr::Mpfr(mpfr_prec_t prec) {
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
}

Mpfr::Mpfr(const Mpfr& o) {
    mpfr_init2(value_, o.precision());
    mpfr_set(value_, o.value_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr&& o) noexcept {
    mpfr_init2(value_, o.precision());
    mpfr_swap(value_, o.value_);
}

Mpfr& Mpfr::operator=(const Mpfr& o) {
    if (this != &o) {
        mpfr_set_prec(value_, o.precision());
        mpfr_set(value_, o.value_, MPFR_RNDN);
    }
    return *this;
}

Mpfr& Mpfr::operator=(Mpfr&& o) noexcept {
    mpfr_swap(value_, o.value_);
    return *this;
}

Mpfr::~Mpfr() { mpfr_clear(value_); }

std::string Mpfr::to_string(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits - 1, value_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

namespace {

// rad += |mid| * 2^(1 - prec), rounded up.
void widen_for_rounding(const Mpfr& mid, Mpfr& rad) {
    Mpfr err(rad.precision());
    mpfr_abs(err.get(), mid.get(), MPFR_RNDU);
    mpfr_mul_2si(err.get(), err.get(), 1 - static_cast<long>(mid.precision()), MPFR_RNDU);
    mpfr_add(rad.get(), rad.get(), err.get(), MPFR_RNDU);
}

Mpfr abs_of(const Mpfr& x) {
    Mpfr r(x.precision());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);  // exact
    return r;
}

}  // namespace

BigApprox::BigApprox(mpfr_prec_t prec) : mid_(prec), rad_(prec) {}

BigApprox::BigApprox(const Rational& q, mpfr_prec_t prec) : mid_(prec), rad_(prec) {
    int inexact = mpfr_set_q(mid_.get(), q.raw().get_mpq_t(), MPFR_RNDN);
    if (inexact != 0) {
        add_rounding_error();
    }
}

BigApprox BigApprox::sqrt_of(const Rational& q, mpfr_prec_t prec) {
    if (q.sign() < 0) {
        throw ArithmeticError("real square root of a negative number");
    }
    BigApprox x(q, prec);
    if (q.is_zero()) {
        return x;
    }
    BigApprox r(prec);
    mpfr_sqrt(r.mid_.get(), x.mid_.get(), MPFR_RNDN);
    // |sqrt(t) - sqrt(m)| <= |t - m| / sqrt(m).
    Mpfr low(prec);
    mpfr_sqrt(low.get(), x.mid_.get(), MPFR_RNDD);
    mpfr_div(r.rad_.get(), x.rad_.get(), low.get(), MPFR_RNDU);
    r.add_rounding_error();
    return r;
}

BigApprox BigApprox::from_value(const Mpfr& v, bool rounded) {
    BigApprox out(v.precision());
    mpfr_set(out.mid_.get(), v.get(), MPFR_RNDN);
    if (rounded) out.add_rounding_error();
    return out;
}

void BigApprox::widen(const Mpfr& extra) { mpfr_add(rad_.get(), rad_.get(), extra.get(), MPFR_RNDU); }

void BigApprox::clear_radius() { mpfr_set_zero(rad_.get(), 1); }

void BigApprox::add_rounding_error() { widen_for_rounding(mid_, rad_); }

BigApprox& BigApprox::operator+=(const BigApprox& o) {
    mpfr_add(mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    mpfr_add(rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    add_rounding_error();
    return *this;
}

BigApprox& BigApprox::operator-=(const BigApprox& o) {
    mpfr_sub(mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    mpfr_add(rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    add_rounding_error();
    return *this;
}

BigApprox& BigApprox::operator*=(const BigApprox& o) {
    mpfr_prec_t p = precision();
    Mpfr am = abs_of(mid_);
    Mpfr bm = abs_of(o.mid_);
    Mpfr t1(p);
    Mpfr t2(p);
    Mpfr t3(p);
    mpfr_mul(t1.get(), am.get(), o.rad_.get(), MPFR_RNDU);
    mpfr_mul(t2.get(), bm.get(), rad_.get(), MPFR_RNDU);
    mpfr_mul(t3.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    mpfr_mul(mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    mpfr_add(rad_.get(), t1.get(), t2.get(), MPFR_RNDU);
    mpfr_add(rad_.get(), rad_.get(), t3.get(), MPFR_RNDU);
    add_rounding_error();
    return *this;
}

BigApprox& BigApprox::operator/=(const BigApprox& o) {
    mpfr_prec_t p = precision();
    Mpfr bm = abs_of(o.mid_);
    if (mpfr_cmp(bm.get(), o.rad_.get()) <= 0) {
        throw ArithmeticError("division by a ball containing zero");
    }
    BigApprox inv(p);
    mpfr_ui_div(inv.mid_.get(), 1, o.mid_.get(), MPFR_RNDN);
    // |1/t - 1/m| <= r / (|m| (|m| - r)).
    Mpfr denom(p);
    mpfr_sub(denom.get(), bm.get(), o.rad_.get(), MPFR_RNDD);
    mpfr_mul(denom.get(), denom.get(), bm.get(), MPFR_RNDD);
    mpfr_div(inv.rad_.get(), o.rad_.get(), denom.get(), MPFR_RNDU);
    inv.add_rounding_error();
    return *this *= inv;
}

BigApprox BigApprox::operator-() const {
    BigApprox r = *this;
    mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
    return r;
}

Mpfr BigApprox::abs_upper() const {
    Mpfr r(precision());
    mpfr_abs(r.get(), mid_.get(), MPFR_RNDU);
    mpfr_add(r.get(), r.get(), rad_.get(), MPFR_RNDU);
    return r;
}

bool BigApprox::contains(const Rational& q) const {
    mpfr_prec_t p = precision() + 64;
    Mpfr lo(p);
    Mpfr hi(p);
    mpfr_sub(lo.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    mpfr_add(hi.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    return mpfr_cmp_q(lo.get(), q.raw().get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi.get(), q.raw().get_mpq_t()) >= 0;
}

bool BigApprox::encloses(const BigApprox& inner) const {
    mpfr_prec_t p = std::max(precision(), inner.precision()) + 64;
    Mpfr olo(p);
    Mpfr ohi(p);
    Mpfr ilo(p);
    Mpfr ihi(p);
    mpfr_sub(olo.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    mpfr_add(ohi.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    mpfr_sub(ilo.get(), inner.mid_.get(), inner.rad_.get(), MPFR_RNDD);
    mpfr_add(ihi.get(), inner.mid_.get(), inner.rad_.get(), MPFR_RNDU);
    return mpfr_cmp(olo.get(), ilo.get()) <= 0 && mpfr_cmp(ihi.get(), ohi.get()) <= 0;
}

bool BigApprox::contains_zero() const {
    Mpfr a = abs_of(mid_);
    return mpfr_cmp(a.get(), rad_.get()) <= 0;
}

ComplexApprox& ComplexApprox::operator+=(const ComplexApprox& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ComplexApprox& ComplexApprox::operator-=(const ComplexApprox& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ComplexApprox& ComplexApprox::operator*=(const ComplexApprox& o) {
    BigApprox re = re_ * o.re_ - im_ * o.im_;
    BigApprox im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

ComplexApprox& ComplexApprox::operator/=(const ComplexApprox& o) {
    BigApprox n2 = o.re_ * o.re_ + o.im_ * o.im_;
    BigApprox re = re_ * o.re_ + im_ * o.im_;
    BigApprox im = im_ * o.re_ - re_ * o.im_;
    re_ = re / n2;
    im_ = im / n2;
    return *this;
}

Mpfr ComplexApprox::abs_upper() const {
    Mpfr a = re_.abs_upper();
    Mpfr b = im_.abs_upper();
    Mpfr r(precision());
    mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

Mpfr ComplexApprox::abs_mid() const {
    Mpfr r(precision());
    mpfr_hypot(r.get(), re_.mid().get(), im_.mid().get(), MPFR_RNDN);
    return r;
}

void ComplexApprox::clear_radius() {
    re_.clear_radius();
    im_.clear_radius();
}

std::string ComplexApprox::to_string(int digits) const {
    std::string out = re_.mid().to_string(digits);
    if (mpfr_zero_p(im_.mid().get()) != 0) {
        return out;
    }
    Mpfr mag(precision());
    mpfr_abs(mag.get(), im_.mid().get(), MPFR_RNDN);
    out += mpfr_sgn(im_.mid().get()) < 0 ? " - " : " + ";
    out += mag.to_string(digits) + "*I";
    return out;
}

ComplexApprox sqrt_approx(const Integer& m, mpfr_prec_t prec) {
    if (m >= 0) {
        return {BigApprox::sqrt_of(Rational(m), prec), BigApprox(prec)};
    }
    return {BigApprox(prec), BigApprox::sqrt_of(Rational(Integer(-m)), prec)};
}

ComplexApprox embed(const Rational& x, mpfr_prec_t prec) { return {x, prec}; }

ComplexApprox embed(const QuadExt& x, mpfr_prec_t prec) {
    ComplexApprox r = embed(x.a(), prec);
    if (!x.b().is_zero()) {
        r += embed(x.b(), prec) * sqrt_approx(Integer(x.radicand()), prec);
    }
    return r;
}

ComplexApprox embed(const TowerScalar& x, mpfr_prec_t prec) {
    ComplexApprox r = embed(x.a(), prec);
    if (!x.b().is_zero()) {
        r += embed(x.b(), prec) * sqrt_approx(Integer(x.radicand()), prec);
    }
    return r;
}

BigApprox embed_real(const TowerScalar& x, mpfr_prec_t prec) {
    if (x.radicand() < 0 || x.a().radicand() < 0 || x.b().radicand() < 0) {
        throw ArithmeticError("scalar has no real embedding");
    }
    return embed(x, prec).re();
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

BigApprox parse_real(const std::string& text, mpfr_prec_t prec) {
    BigApprox r(prec);
    std::string t = trim(text);
    if (t.empty() || mpfr_set_str(r.mid_mut().get(), t.c_str(), 10, MPFR_RNDN) != 0) {
        throw std::invalid_argument("malformed decimal: '" + text + "'");
    }
    return r;
}

}  // namespace

ComplexApprox parse_complex_approx(const std::string& text, mpfr_prec_t prec) {
    std::string t = trim(text);
    if (t.empty() || t.back() != 'I') {
        return {parse_real(t, prec), BigApprox(prec)};
    }
    // Split at the last binary +/- that is not part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t i = t.size() - 1; i > 0; --i) {
        if ((t[i] == '+' || t[i] == '-') && std::tolower(t[i - 1]) != 'e') {
            split = i;
            break;
        }
    }
    std::string imag = t.substr(0, t.size() - 1);
    if (!imag.empty() && imag.back() == '*') {
        imag.pop_back();
    }
    if (split == std::string::npos) {
        return {BigApprox(prec), parse_real(imag, prec)};
    }
    BigApprox re = parse_real(t.substr(0, split), prec);
    std::string im_text = imag.substr(split + 1);
    BigApprox im = parse_real(im_text, prec);
    if (t[split] == '-') {
        im = -im;
    }
    return {std::move(re), std::move(im)};
}

}  // namespace waring
