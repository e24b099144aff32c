#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "plab/fq.hpp"
#include "plab/intmatrix.hpp"
#include "plab/precurve.hpp"
#include "plab/rational.hpp"

namespace plab {

// Append-only point-count cache, persisted as lines "N a p e modulus count".
struct CountCache {
    using Key = std::tuple<int, std::string, long, int, std::string>;
    std::map<Key, Int> entries;
    std::string path;  // empty: in-memory only
    std::mutex mu;

    static Key make_key(const CurveSpec& spec, long p, int e, const std::string& modulus) {
        return {spec.N, rat_str(spec.a), p, e, modulus};
    }
    std::optional<Int> lookup(const Key& k);
    void store(const Key& k, const Int& count);  // writes through to path if set

    void load_file(const std::string& file);  // throws on malformed lines (with line number)
};

// #X(N,a)(F_{p^e}) on the projective quadric model: affine count + 2^{N-1}.
// p odd; den(a) must be prime to p. Counting enumerates c and counts distinct
// roots in x via x^q mod f; embarrassingly parallel over the c-range.
Int count_points(const CurveSpec& spec, long p, int e, int threads = 1, CountCache* cache = nullptr);

struct EulerFactor {
    long p = 0;
    int genus = 0;
    enum class Reduction { good, nodal, unipotent } type = Reduction::good;
    std::vector<Int> coeffs;  // ascending; size 2*genus_of_L + 1 when complete
    int known_degree = 0;     // coefficients are valid up to this degree

    bool complete() const { return known_degree == static_cast<int>(coeffs.size()) - 1; }
    Int value_at_1() const;  // requires complete()
};

// Good odd p: counts for e = 1..g give c_1..c_g by Newton identities; the
// functional equation c_{2g-k} = p^{g-k} c_k supplies the rest.
EulerFactor euler_factor_good(const CurveSpec& spec, long p, int threads = 1, CountCache* cache = nullptr);

Int jacobian_order(const EulerFactor& L);

// Singular point of the affine plane model over an extension of F_p.
struct SingularPoint {
    long p = 0;
    std::vector<uint32_t> field_modulus;  // modulus of the residue field F_{p^k}
    Fq x, c;                              // coordinates in that field
    bool is_node = false;                 // Hessian of the local quadratic form nondegenerate
    bool split = false;                   // tangent directions rational over the residue field
};

struct BadPrimeReport {
    long p = 0;
    std::vector<SingularPoint> points;
    bool all_split_rational_nodes() const;
};

// Odd primes p < pmax at which the affine model is singular over \bar{F}_p.
std::vector<long> find_bad_primes(const CurveSpec& spec, long pmax);

bool is_bad_prime(const CurveSpec& spec, long p);

BadPrimeReport analyze_bad_prime(const CurveSpec& spec, long p);

// Bad Euler factor at a prime where all singularities are split nodes rational
// over F_p: L_p = (1-X)^{#nodes} * Ltilde, with Ltilde the Euler factor of the
// normalization (genus g - #nodes) built from node-corrected counts for
// e = 1..e_max. If e_max < genus of the normalization the factor is partial.
EulerFactor euler_factor_bad_nodal(const CurveSpec& spec, long p, const BadPrimeReport& report,
                                   int e_max, int threads = 1, CountCache* cache = nullptr);

struct ConductorData {
    // (p, tame exponent, wild exponent)
    std::vector<std::tuple<long, int, int>> exponents;
    Int total;
};

// Tame exponent at an odd nodal prime = toric dimension = #nodes. At p = 2 the
// reduction is totally unipotent (consumed constant): tame exponent
// 2 * genus = 10, wild part w passed in.
ConductorData conductor(const std::vector<BadPrimeReport>& odd_reports, int w_at_2, int genus_at_2 = 5);

struct IntersectionData {
    std::vector<std::string> labels;
    std::vector<Int> multiplicities;
    IntMat M;  // symmetric intersection matrix
};

// Special fiber of the regular model over Z_2 (consumed as data).
IntersectionData figure1_intersection_data();

// Invariant factors (> 1) of ker(deg)/im(M), deg(y) = sum m_i y_i.
// Errors unless M * m = 0.
std::vector<Int> component_group(const IntersectionData& data);

}  // namespace plab
