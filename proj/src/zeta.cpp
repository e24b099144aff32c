#include "plab/zeta.hpp"

#include <fstream>
#include <sstream>
#include <thread>

#include "plab/count_kernel.hpp"
#include "plab/primes.hpp"

namespace plab {

std::optional<Int> CountCache::lookup(const Key& k) {
    std::lock_guard<std::mutex> g(mu);
    auto it = entries.find(k);
    if (it == entries.end()) return std::nullopt;
    return it->second;
}

void CountCache::store(const Key& k, const Int& count) {
    std::lock_guard<std::mutex> g(mu);
    auto [it, inserted] = entries.emplace(k, count);
    if (!inserted) return;
    if (!path.empty()) {
        std::ofstream out(path, std::ios::app);
        out << std::get<0>(k) << ' ' << std::get<1>(k) << ' ' << std::get<2>(k) << ' '
            << std::get<3>(k) << ' ' << std::get<4>(k) << ' ' << count.get_str() << '\n';
    }
}

void CountCache::load_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) return;  // absent cache is fine
    std::string line;
    long lineno = 0;
    std::lock_guard<std::mutex> g(mu);
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream is(line);
        int N, e;
        std::string a, modulus, count;
        long p;
        if (!(is >> N >> a >> p >> e >> modulus >> count))
            throw std::runtime_error("cache: malformed line " + std::to_string(lineno) + " in " + file);
        Int cnt;
        if (mpz_set_str(cnt.get_mpz_t(), count.c_str(), 10) != 0)
            throw std::runtime_error("cache: malformed count at line " + std::to_string(lineno) + " in " + file);
        entries[{N, a, p, e, modulus}] = cnt;
    }
    path = file;
}

namespace {

uint32_t a_residue(const Rat& a, long p) {
    Int num = a.get_num() % p;
    Int den = a.get_den() % p;
    if (den == 0) throw std::invalid_argument("count_points: den(a) divisible by p");
    long n = ((num.get_si() % p) + p) % p;
    long d = ((den.get_si() % p) + p) % p;
    // n * d^{-1} mod p
    long inv = 1, base = d, e = p - 2;
    while (e) {
        if (e & 1) inv = static_cast<long>(mulmod_u64(inv, base, p));
        base = static_cast<long>(mulmod_u64(base, base, p));
        e >>= 1;
    }
    return static_cast<uint32_t>(mulmod_u64(n, inv, p));
}

Int affine_count(const CurveSpec& spec, const FqCtx& F, int threads) {
    uint32_t ares = a_residue(spec.a, F.p);
    int nt = std::max(1, threads);
    if (nt == 1 || F.q < 4096) return Int(static_cast<unsigned long>(count_affine_range(F, spec.N, ares, 0, F.q)));
    std::vector<uint64_t> partial(nt, 0);
    std::vector<std::thread> pool;
    uint64_t chunk = (F.q + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
        uint64_t lo = t * chunk, hi = std::min<uint64_t>(F.q, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, t, lo, hi] { partial[t] = count_affine_range(F, spec.N, ares, lo, hi); });
    }
    for (auto& th : pool) th.join();
    uint64_t total = 0;
    for (uint64_t v : partial) total += v;
    return Int(static_cast<unsigned long>(total));
}

}  // namespace

Int count_points(const CurveSpec& spec, long p, int e, int threads, CountCache* cache) {
    if (p == 2) throw std::invalid_argument("count_points: p = 2 excluded (char 2)");
    if (spec.N < 2) throw std::invalid_argument("count_points: N >= 2");
    FqCtx F(static_cast<uint32_t>(p), e);
    auto key = CountCache::make_key(spec, p, e, F.modulus_str());
    if (cache)
        if (auto hit = cache->lookup(key)) return *hit;
    Int total = affine_count(spec, F, threads) + Int(1L << (spec.N - 1));
    if (cache) cache->store(key, total);
    return total;
}

Int EulerFactor::value_at_1() const {
    if (!complete()) throw std::logic_error("EulerFactor: value_at_1 on a partial factor");
    Int s = 0;
    for (const Int& c : coeffs) s += c;
    return s;
}

namespace {

// power sums S_e -> coefficients of prod (1 - alpha_i X) via Newton identities
std::vector<Int> newton_coeffs(const std::vector<Int>& S) {
    std::vector<Int> c{Int(1)};
    for (size_t k = 1; k <= S.size(); ++k) {
        Int v = 0;
        for (size_t i = 1; i <= k; ++i) v += S[i - 1] * c[k - i];
        if (v % Int(static_cast<long>(k)) != 0) throw std::logic_error("newton_coeffs: non-integral coefficient");
        c.push_back(-v / Int(static_cast<long>(k)));
    }
    return c;
}

void weil_check(long p, int e, long g, const Int& count) {
    Int pe = pow_int(Int(p), e);
    Int dev = count - pe - 1;
    if (dev * dev > 4 * g * g * pe)
        throw std::runtime_error("count violates the Weil bound: bad prime or miscount at p=" + std::to_string(p));
}

EulerFactor factor_from_counts(long p, int g, const std::vector<Int>& counts) {
    // counts[e-1] = #C(F_{p^e}) for e = 1..m (normalization counts)
    std::vector<Int> S;
    for (size_t e = 1; e <= counts.size(); ++e) S.push_back(pow_int(Int(p), e) + 1 - counts[e - 1]);
    std::vector<Int> c = newton_coeffs(S);
    EulerFactor L;
    L.p = p;
    L.genus = g;
    L.coeffs.assign(2 * g + 1, Int(0));
    int m = static_cast<int>(counts.size());
    for (int k = 0; k <= std::min(m, 2 * g); ++k) L.coeffs[k] = c[k];
    L.known_degree = m;
    if (m >= g) {
        // functional equation L(X) = p^g X^{2g} L(1/pX)
        for (int k = g - 1; k >= 0; --k) L.coeffs[2 * g - k] = pow_int(Int(p), g - k) * c[k];
        L.known_degree = 2 * g;
    }
    return L;
}

}  // namespace

EulerFactor euler_factor_good(const CurveSpec& spec, long p, int threads, CountCache* cache) {
    if (is_bad_prime(spec, p))
        throw std::invalid_argument("euler_factor_good: " + std::to_string(p) + " is a bad prime");
    long g = genus(spec.N);
    std::vector<Int> counts;
    for (int e = 1; e <= g; ++e) {
        Int n = count_points(spec, p, e, threads, cache);
        weil_check(p, e, g, n);
        counts.push_back(n);
    }
    EulerFactor L = factor_from_counts(p, static_cast<int>(g), counts);
    L.type = EulerFactor::Reduction::good;
    return L;
}

Int jacobian_order(const EulerFactor& L) { return L.value_at_1(); }

namespace {

// singular locus decomposition: F_x = 2^N x f(x) f^2(x)...f^{N-1}(x), so a
// singular point has f_c^i(x) = 0 for some i and then f_c^m(0) = a, m = N - i.
struct SingularSearch {
    const CurveSpec& spec;
    long p;
    MultiPoly<Rat> F, Fx, Fc, Fxx, Fxc, Fcc;

    explicit SingularSearch(const CurveSpec& s, long p_) : spec(s), p(p_), F(affine_polynomial(s)) {
        Fx = F.derivative(0);
        Fc = F.derivative(1);
        Fxx = Fx.derivative(0);
        Fxc = Fx.derivative(1);
        Fcc = Fc.derivative(1);
    }

    // f_c^m(0) - a over F_p as a univariate polynomial in c
    FqPoly orbit_poly(const FqCtx& Fp, int m) const {
        // iterate symbolically over F_p[c]
        FqPoly v{fq_zero(Fp)};  // 0
        for (int i = 0; i < m; ++i) {
            v = fqp_mul(Fp, v, v);
            FqPoly cpoly{fq_zero(Fp), fq_one(Fp)};
            v = fqp_add(Fp, v, cpoly);
        }
        uint32_t ares = a_residue(spec.a, p);
        return fqp_sub(Fp, v, FqPoly{fq_from_int(Fp, ares)});
    }

    // f_{c0}^k(x) over K = F_p[c]/(h)
    FqPoly iterate_poly(const FqCtx& K, const Fq& c0, int k) const {
        FqPoly v{fq_zero(K), fq_one(K)};  // x
        for (int i = 0; i < k; ++i) {
            v = fqp_mul(K, v, v);
            v = fqp_add(K, v, FqPoly{c0});
        }
        return v;
    }

    // a bivariate integer polynomial evaluated along (x, c0) into K[x]
    FqPoly partial_in_x(const FqCtx& K, const MultiPoly<Rat>& g, const Fq& c0) const {
        FqPoly out;
        for (const auto& [e, v] : g.terms) {
            Int num = v.get_num() % p;
            long n = ((num.get_si() % p) + p) % p;
            Fq coef = fq_mul(K, fq_from_int(K, n), fq_pow(K, c0, e[1]));
            while (static_cast<int>(out.size()) <= e[0]) out.push_back(fq_zero(K));
            out[e[0]] = fq_add(K, out[e[0]], coef);
        }
        return fqp_trim(K, out);
    }
};

}  // namespace

bool is_bad_prime(const CurveSpec& spec, long p) {
    if (p == 2) throw std::invalid_argument("is_bad_prime: odd p only");
    SingularSearch S(spec, p);
    FqCtx Fp(static_cast<uint32_t>(p), 1);
    for (int m = 1; m <= spec.N; ++m) {
        FqPoly G = S.orbit_poly(Fp, m);
        if (fqp_deg(G) < 0) continue;
        for (auto& [h, mult] : fq_factor(Fp, G, 11)) {
            std::vector<uint32_t> hm;
            for (auto& cf : h) hm.push_back(cf[0]);
            FqCtx K = fqp_deg(h) == 1 ? Fp : FqCtx(static_cast<uint32_t>(p), hm);
            Fq c0 = fqp_deg(h) == 1 ? fq_neg(Fp, h[0]) : fq_from_index(K, static_cast<uint64_t>(p));  // class of c
            FqPoly fk = S.iterate_poly(K, c0, spec.N - m);
            FqPoly fc = S.partial_in_x(K, S.Fc, c0);
            FqPoly g = fqp_gcd(K, fk, fc);
            if (fqp_deg(g) > 0) return true;
        }
    }
    return false;
}

std::vector<long> find_bad_primes(const CurveSpec& spec, long pmax) {
    std::vector<long> bad;
    for (long p = 3; p < pmax; p += 2)
        if (is_prime_u64(static_cast<uint64_t>(p)) && is_bad_prime(spec, p)) bad.push_back(p);
    return bad;
}

BadPrimeReport analyze_bad_prime(const CurveSpec& spec, long p) {
    BadPrimeReport rep;
    rep.p = p;
    SingularSearch S(spec, p);
    FqCtx Fp(static_cast<uint32_t>(p), 1);
    // (residue field modulus, x index, c index); the same point can surface for several m
    std::vector<std::tuple<std::vector<uint32_t>, uint64_t, uint64_t>> seen;

    for (int m = 1; m <= spec.N; ++m) {
        FqPoly G = S.orbit_poly(Fp, m);
        if (fqp_deg(G) < 0) continue;
        for (auto& [h, mult] : fq_factor(Fp, G, 11)) {
            int k = fqp_deg(h);
            std::vector<uint32_t> hm;
            for (auto& cf : h) hm.push_back(cf[0]);
            FqCtx K = k == 1 ? Fp : FqCtx(static_cast<uint32_t>(p), hm);
            Fq c0 = k == 1 ? fq_neg(Fp, h[0]) : fq_from_index(K, static_cast<uint64_t>(p));
            FqPoly fk = S.iterate_poly(K, c0, spec.N - m);
            FqPoly fc = S.partial_in_x(K, S.Fc, c0);
            FqPoly g = fqp_gcd(K, fk, fc);
            if (fqp_deg(g) < 1) continue;
            for (auto& [xf, xm] : fq_factor(K, g, 13)) {
                int dx = fqp_deg(xf);
                FqCtx Kpt = K;
                Fq x0, cpt;
                if (dx == 1) {
                    x0 = fq_neg(K, xf[0]);
                    cpt = c0;
                } else if (k == 1) {
                    // c rational, x in an extension: residue field F_p[x]/(xf)
                    std::vector<uint32_t> xm2;
                    for (auto& cf : xf) xm2.push_back(cf[0]);
                    Kpt = FqCtx(static_cast<uint32_t>(p), xm2);
                    x0 = fq_from_index(Kpt, static_cast<uint64_t>(p));  // class of x
                    cpt = fq_from_int(Kpt, static_cast<long>(c0[0]));
                } else {
                    throw std::runtime_error("analyze_bad_prime: singular point over a composite extension (unsupported)");
                }
                uint64_t xi = fq_index(Kpt, x0), cix = fq_index(Kpt, cpt);
                bool dup = false;
                for (auto& [smod, sx, sc] : seen)
                    dup = dup || (smod == Kpt.modulus && sx == xi && sc == cix);
                if (dup) continue;
                seen.emplace_back(Kpt.modulus, xi, cix);

                auto ev = [&](const MultiPoly<Rat>& poly) {
                    std::vector<Fq> vals{x0, cpt};
                    return multipoly_eval_fq(Kpt, poly, vals);
                };
                if (!fq_is_zero(ev(S.F)) || !fq_is_zero(ev(S.Fx)) || !fq_is_zero(ev(S.Fc)))
                    throw std::logic_error("analyze_bad_prime: candidate is not singular");
                Fq fxx = ev(S.Fxx), fxc = ev(S.Fxc), fcc = ev(S.Fcc);
                Fq det = fq_sub(Kpt, fq_mul(Kpt, fxx, fcc), fq_mul(Kpt, fxc, fxc));
                SingularPoint pt;
                pt.p = p;
                pt.field_modulus = Kpt.modulus;
                pt.x = x0;
                pt.c = cpt;
                pt.is_node = !fq_is_zero(det);
                // discriminant of the quadratic tangent form: fxc^2 - fxx*fcc
                Fq disc = fq_neg(Kpt, det);
                pt.split = pt.is_node && fq_is_square(Kpt, disc);
                rep.points.push_back(pt);
            }
        }
    }
    return rep;
}

bool BadPrimeReport::all_split_rational_nodes() const {
    for (const auto& pt : points)
        if (!pt.is_node || !pt.split || pt.field_modulus.size() != 2) return false;
    return !points.empty();
}

EulerFactor euler_factor_bad_nodal(const CurveSpec& spec, long p, const BadPrimeReport& report,
                                   int e_max, int threads, CountCache* cache) {
    if (!report.all_split_rational_nodes())
        throw std::invalid_argument("euler_factor_bad_nodal: singularities are not split F_p-rational nodes");
    long g = genus(spec.N);
    int nodes = static_cast<int>(report.points.size());
    int gt = static_cast<int>(g) - nodes;  // genus of the normalization
    int m = std::min(e_max, gt);
    std::vector<Int> counts;
    for (int e = 1; e <= m; ++e) {
        // each split F_p-rational node has two rational preimages on the normalization
        Int n = count_points(spec, p, e, threads, cache) + nodes;
        weil_check(p, e, gt, n);
        counts.push_back(n);
    }
    EulerFactor Lt = factor_from_counts(p, gt, counts);
    // L_p = (1 - X)^{nodes} * Ltilde
    EulerFactor L;
    L.p = p;
    L.genus = static_cast<int>(g);
    L.type = EulerFactor::Reduction::nodal;
    std::vector<Int> onemx{Int(1), Int(-1)};
    std::vector<Int> acc{Int(1)};
    for (int i = 0; i < nodes; ++i) {
        std::vector<Int> nxt(acc.size() + 1, Int(0));
        for (size_t j = 0; j < acc.size(); ++j) {
            nxt[j] += acc[j];
            nxt[j + 1] -= acc[j];
        }
        acc = nxt;
    }
    L.coeffs.assign(2 * gt + nodes + 1, Int(0));
    for (size_t i = 0; i < acc.size(); ++i)
        for (int j = 0; j <= Lt.known_degree; ++j)
            if (i + j < L.coeffs.size()) L.coeffs[i + j] += acc[i] * Lt.coeffs[j];
    L.known_degree = Lt.known_degree == 2 * gt ? 2 * gt + nodes : Lt.known_degree;
    if (!Lt.complete()) L.coeffs.resize(L.known_degree + 1);
    return L;
}

ConductorData conductor(const std::vector<BadPrimeReport>& odd_reports, int w_at_2, int genus_at_2) {
    if (w_at_2 < 0) throw std::invalid_argument("conductor: w >= 0");
    ConductorData data;
    // p = 2: totally unipotent reduction, tame exponent = 2 * unipotent dim
    data.exponents.emplace_back(2, 2 * genus_at_2, w_at_2);
    for (const auto& rep : odd_reports) {
        if (!rep.all_split_rational_nodes())
            throw std::invalid_argument("conductor: non-nodal odd reduction unsupported");
        data.exponents.emplace_back(rep.p, static_cast<int>(rep.points.size()), 0);
    }
    data.total = 1;
    for (auto& [p, tame, wild] : data.exponents)
        data.total *= pow_int(Int(p), static_cast<unsigned long>(tame + wild));
    return data;
}

IntersectionData figure1_intersection_data() {
    IntersectionData d;
    d.labels = {"A", "B", "C", "D", "E", "F", "G"};
    d.multiplicities = {Int(1), Int(1), Int(1), Int(1), Int(1), Int(3), Int(3)};
    const int M[7][7] = {
        {-3, 0, 0, 0, 0, 0, 1},
        {0, -3, 0, 0, 0, 1, 0},
        {0, 0, -3, 0, 0, 1, 0},
        {0, 0, 0, -3, 0, 0, 1},
        {0, 0, 0, 0, -6, 1, 1},
        {0, 1, 1, 0, 1, -2, 1},
        {1, 0, 0, 1, 1, 1, -2},
    };
    d.M = IntMat(7, 7);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) d.M.at(i, j) = M[i][j];
    return d;
}

std::vector<Int> component_group(const IntersectionData& data) {
    int n = data.M.rows;
    if (data.M.cols != n || static_cast<int>(data.multiplicities.size()) != n)
        throw std::invalid_argument("component_group: shape mismatch");
    std::vector<Int> Mm = data.M.apply(data.multiplicities);
    for (const Int& v : Mm)
        if (v != 0) throw std::invalid_argument("component_group: M * m != 0");
    // kernel of deg: SNF of the 1 x n row (m_0 ... m_{n-1}); columns 1..n-1 of V
    IntMat row(1, n);
    for (int j = 0; j < n; ++j) row.at(0, j) = data.multiplicities[j];
    SmithResult s = smith_normal_form(row);
    // coordinates of M's columns in the kernel basis: rows 1..n-1 of Vinv * M
    IntMat A0 = s.Vinv * data.M;
    IntMat A(n - 1, n);
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < n; ++j) A.at(i - 1, j) = A0.at(i, j);
    // sanity: row 0 must vanish (columns of M have degree zero)
    for (int j = 0; j < n; ++j)
        if (A0.at(0, j) != 0) throw std::logic_error("component_group: degree-zero coordinate nonzero");
    SmithResult sa = smith_normal_form(A);
    std::vector<Int> inv;
    for (const Int& f : sa.invariant_factors())
        if (f > 1) inv.push_back(f);
    if (static_cast<int>(sa.invariant_factors().size()) < n - 1)
        throw std::logic_error("component_group: cokernel not finite");
    return inv;
}

}  // namespace plab
