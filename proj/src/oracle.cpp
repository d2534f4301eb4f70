#include "tauber/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "tauber/engine.hpp"
#include "tauber/special.hpp"

namespace tauber {

OracleForm oracle_form(const Model& model) {
    model.env.validate();
    OracleForm form;
    form.env = model.env;
    form.alpha = model.alpha;
    if (const auto* p = std::get_if<SqrtHolomorphic>(&model.payload)) {
        form.h = p->h;
    } else if (const auto* p = std::get_if<SqrtPole>(&model.payload)) {
        require(!is_general_alpha(model), "pole models use the sqrt exponent");
        form.principal = p->principal;
        form.h = p->h;
    } else if (const auto* p = std::get_if<InteriorPole>(&model.payload)) {
        require(!is_general_alpha(model), "interior-pole models use the sqrt exponent");
        form.interior = true;
        form.ip = *p;
    } else {
        require(!is_general_alpha(model), "raw models use the sqrt exponent");
        const auto& raw = std::get<RawLocalMap>(model.payload);
        RawNormalForm nf = normalize_raw(raw);
        form.principal = std::move(nf.principal);
        form.h = std::move(nf.h);
    }
    return form;
}

namespace {

// Inner coefficients b_0..b_N of the normal form: mode sums over the
// binomial families, each produced by its own one-step recurrence.
std::vector<Rational> inner_exact_prefix(const OracleForm& form, long N) {
    std::vector<Rational> b(static_cast<std::size_t>(N) + 1, rat(0));
    for (std::size_t j = 1; j <= form.principal.size(); ++j) {
        const Rational& D = form.principal[j - 1];
        if (D == 0) continue;
        Rational beta = rat(-static_cast<long>(j), 2);
        Rational c = rat(1);
        for (long n = 0; n <= N; ++n) {
            if (n > 0) c *= Rational(n - 1 - beta) / n;
            b[static_cast<std::size_t>(n)] += D * c;
        }
    }
    if (!form.h.is_zero()) {
        for (int k = 0; k <= form.h.order(); ++k) {
            if (form.h[k] == 0) continue;
            Rational beta = Rational(k) * form.alpha;
            Rational c = rat(1);
            for (long n = 0; n <= N; ++n) {
                if (n > 0) c *= Rational(n - 1 - beta) / n;
                if (c == 0) break;  // polynomial mode exhausted
                b[static_cast<std::size_t>(n)] += form.h[k] * c;
            }
        }
    }
    return b;
}

// Interior-pole prefix via scaled convolutions: work with the rescaled
// variable y = z/R' so every sequence stays O(1)-sized, then unscale once.
std::vector<Rational> interior_exact_prefix(const InteriorPole& ip, const Envelope& env, long N) {
    require(ip.R_prime > 0 && ip.R_check > ip.R_prime, "interior pole: bad radii");
    require(ip.M >= 1 && ip.partial_fractions.size() == static_cast<std::size_t>(ip.M),
            "interior pole: bad principal data");
    const int d = env.d;
    const int r = env.r;
    const std::size_t len = static_cast<std::size_t>(N) + 1;
    // (y^d - 1)^{-1} = -(1 + y^d + y^{2d} + ...).
    std::vector<Rational> base(len, rat(0));
    for (std::size_t i = 0; i < len; i += static_cast<std::size_t>(d)) base[i] = rat(-1);
    std::vector<Rational> scaled(len, rat(0));
    std::vector<Rational> power(len, rat(0));
    power[0] = rat(1);
    Rational radius_pow = rat(1);  // R'^{-d m}
    for (int m = 1; m <= ip.M; ++m) {
        // power <- power * base (truncated convolution).
        std::vector<Rational> next(len, rat(0));
        for (std::size_t i = 0; i < len; ++i) {
            if (power[i] == 0) continue;
            for (std::size_t j = 0; i + j < len; j += static_cast<std::size_t>(d))
                next[i + j] += power[i] * base[j];
        }
        power = std::move(next);
        radius_pow *= pow_rational(ip.R_prime, -d);
        const Rational& c = ip.partial_fractions[static_cast<std::size_t>(m) - 1];
        if (c == 0) continue;
        Rational w = c * radius_pow;
        for (std::size_t i = 0; i < len; ++i)
            if (power[i] != 0) scaled[i] += w * power[i];
    }
    if (ip.tail_coeff != 0) {
        // tail(z) = tail_coeff / (1 - (z/R_check)^d); scaled by R'^i this is
        // tail_coeff * (R'/R_check)^i on indices i = 0 mod d.
        Rational q = pow_rational(ip.R_prime / ip.R_check, d);
        Rational t = ip.tail_coeff;
        for (std::size_t i = 0; i < len; i += static_cast<std::size_t>(d)) {
            scaled[i] += t;
            t *= q;
        }
    }
    // Shift by z^r and unscale: a_{i+r} = scaled_i * R'^{-i} (the z^r factor
    // re-scales by R'^r, absorbed into the running power below).
    std::vector<Rational> a(len, rat(0));
    Rational unscale = rat(1);
    Rational inv = Rational(1) / ip.R_prime;
    for (std::size_t i = 0; r + static_cast<long>(i) <= N; ++i) {
        if (scaled[i] != 0) a[i + static_cast<std::size_t>(r)] = scaled[i] * unscale;
        unscale *= inv;
    }
    return a;
}

}  // namespace

std::vector<Rational> exact_coeffs(const Model& model, long N) {
    require(N >= 0, "exact_coeffs: negative length");
    OracleForm form = oracle_form(model);
    if (form.interior) return interior_exact_prefix(form.ip, form.env, N);

    const int d = form.env.d;
    const int r = form.env.r;
    long inner_count = (N - r) / d;  // inner indices 0..inner_count when r <= N
    std::vector<Rational> a(static_cast<std::size_t>(N) + 1, rat(0));
    if (N < r) return a;
    std::vector<Rational> b = inner_exact_prefix(form, inner_count);
    Rational scale = rat(1);
    Rational step = pow_rational(form.env.R, -d);
    for (long n = 0; n <= inner_count; ++n) {
        if (b[static_cast<std::size_t>(n)] != 0)
            a[static_cast<std::size_t>(d * n + r)] = b[static_cast<std::size_t>(n)] * scale;
        scale *= step;
    }
    return a;
}

BigComplex evaluate_model(const OracleForm& form, const BigComplex& z, mpfr_prec_t prec) {
    const BigComplex one(rat(1), prec);
    if (form.interior) {
        const InteriorPole& ip = form.ip;
        BigComplex zd = pow_int(z, form.env.d, prec);
        BigComplex pole_base = zd - BigComplex(pow_rational(ip.R_prime, form.env.d), prec);
        BigComplex acc(rat(0), prec);
        BigComplex ppow = one;
        for (int m = 1; m <= ip.M; ++m) {
            ppow = ppow * pole_base;
            const Rational& c = ip.partial_fractions[static_cast<std::size_t>(m) - 1];
            if (c == 0) continue;
            acc += BigComplex(c, prec) / ppow;
        }
        if (ip.tail_coeff != 0) {
            BigComplex denom = one - zd * BigComplex(pow_rational(ip.R_check, -form.env.d), prec);
            acc += BigComplex(ip.tail_coeff, prec) / denom;
        }
        if (form.env.r > 0) acc = acc * pow_int(z, form.env.r, prec);
        return acc;
    }

    BigComplex omega = pow_int(z, form.env.d, prec);
    if (form.env.R != 1) omega = omega * BigComplex(pow_rational(form.env.R, -form.env.d), prec);
    BigComplex base = one - omega;
    // w = (1 - omega)^alpha; the normal form is a Laurent polynomial in w.
    BigComplex w = pow(base, form.alpha, prec);
    BigComplex acc(rat(0), prec);
    if (!form.h.is_zero()) {
        for (int k = form.h.order(); k >= 0; --k) {
            acc = acc * w;
            if (form.h[k] != 0) acc = acc + BigComplex(form.h[k], prec);
        }
    }
    if (!form.principal.empty()) {
        BigComplex winv = one / w;
        BigComplex ppow = one;
        for (std::size_t j = 1; j <= form.principal.size(); ++j) {
            ppow = ppow * winv;
            if (form.principal[j - 1] == 0) continue;
            acc = acc + BigComplex(form.principal[j - 1], prec) * ppow;
        }
    }
    if (form.env.r > 0) acc = acc * pow_int(z, form.env.r, prec);
    return acc;
}

std::vector<BigFloat> numeric_coeffs(const Model& model, const Rational& rho, long N, long S,
                                     mpfr_prec_t prec) {
    require(N >= 0, "numeric_coeffs: negative length");
    require(S > 2 * N, "numeric_coeffs: need S > 2N sample points");
    require(rho > 0, "numeric_coeffs: radius must be positive");
    OracleForm form = oracle_form(model);
    if (form.interior)
        require(rho < form.ip.R_prime, "numeric_coeffs: circle must stay inside the pole radius");
    else
        require(rho < form.env.R, "numeric_coeffs: circle must stay inside the singularity radius");

    std::vector<BigComplex> unit(static_cast<std::size_t>(S));
    for (long s = 0; s < S; ++s) unit[static_cast<std::size_t>(s)] = BigComplex::unit_circle(s, S, prec);
    BigComplex rho_c(rho, prec);
    std::vector<BigComplex> f(static_cast<std::size_t>(S));
    for (long s = 0; s < S; ++s)
        f[static_cast<std::size_t>(s)] = evaluate_model(form, rho_c * unit[static_cast<std::size_t>(s)], prec);

    std::vector<BigFloat> a(static_cast<std::size_t>(N) + 1, BigFloat::zero(prec));
    BigFloat inv_s = BigFloat(1, prec) / BigFloat(S, prec);
    Rational rho_pow = rat(1);
    for (long n = 0; n <= N; ++n) {
        BigComplex acc(rat(0), prec);
        for (long s = 0; s < S; ++s) {
            long idx = (S - (n * s) % S) % S;  // e^{-2 pi i n s / S}
            acc += f[static_cast<std::size_t>(s)] * unit[static_cast<std::size_t>(idx)];
        }
        a[static_cast<std::size_t>(n)] = acc.re() * inv_s / BigFloat(rho_pow, prec);
        rho_pow *= rho;
    }
    return a;
}

std::vector<BigFloat> richardson_fit(const std::vector<std::pair<long, BigFloat>>& samples,
                                     const std::vector<Rational>& exponents) {
    const std::size_t L = exponents.size();
    require(L >= 1 && samples.size() == L, "richardson_fit: need as many samples as exponents");
    mpfr_prec_t prec = BigFloat::default_precision();
    for (const auto& s : samples) prec = std::max(prec, s.second.precision());
    std::vector<std::vector<BigFloat>> A(L, std::vector<BigFloat>(L + 1, BigFloat::zero(prec)));
    for (std::size_t i = 0; i < L; ++i) {
        require(samples[i].first >= 1, "richardson_fit: indices must be >= 1");
        for (std::size_t j = 0; j < L; ++j)
            A[i][j] = pow_rational_exp(samples[i].first, -exponents[j], prec);
        A[i][L] = samples[i].second;
    }
    for (std::size_t col = 0; col < L; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < L; ++i)
            if (abs(A[i][col]) > abs(A[piv][col])) piv = i;
        require(!A[piv][col].is_zero(), "richardson_fit: singular system");
        std::swap(A[col], A[piv]);
        for (std::size_t i = col + 1; i < L; ++i) {
            if (A[i][col].is_zero()) continue;
            BigFloat factor = A[i][col] / A[col][col];
            for (std::size_t j = col; j <= L; ++j) A[i][j] -= factor * A[col][j];
        }
    }
    std::vector<BigFloat> c(L, BigFloat::zero(prec));
    for (std::size_t i = L; i-- > 0;) {
        BigFloat acc = A[i][L];
        for (std::size_t j = i + 1; j < L; ++j) acc -= A[i][j] * c[j];
        c[i] = acc / A[i][i];
    }
    return c;
}

SlopeFit log_log_slope(const std::vector<std::pair<long, BigFloat>>& values) {
    SlopeFit fit;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [n, v] : values) {
        if (v.is_zero() || n < 1) continue;
        double x = std::log(static_cast<double>(n));
        double y = log(abs(v)).to_double();
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++fit.points;
    }
    if (fit.points < 2) {
        fit.underflow = true;
        return fit;
    }
    double k = static_cast<double>(fit.points);
    double denom = k * sxx - sx * sx;
    if (denom == 0) {
        fit.underflow = true;
        return fit;
    }
    fit.slope = (k * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / k;
    return fit;
}

}  // namespace tauber
