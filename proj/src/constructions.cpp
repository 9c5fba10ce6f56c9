#include "lingame/constructions.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "lingame/errors.hpp"

namespace lingame {

GameMatrix binary_game(int n_a, int n_b, int max_bits) {
    if (n_a < 2 || n_b < 2) throw InputError("binary construction needs n_a, n_b >= 2");
    const std::int64_t free_cells = static_cast<std::int64_t>(n_a - 1) * (n_b - 1);
    if (free_cells + 1 > max_bits)
        throw InputError("binary construction would need d = 2^" + std::to_string(free_cells + 1) +
                         ", over the configured cap");
    Int d = Int(1) << (free_cells + 1);
    std::vector<Int> k(static_cast<std::size_t>(n_a) * n_b, Int(0));
    std::int64_t exponent = 1;
    for (int i = 1; i < n_a; ++i)
        for (int j = 1; j < n_b; ++j)
            k[static_cast<std::size_t>(i) * n_b + j] = Int(1) << exponent++;
    return GameMatrix(n_a, n_b, std::move(d), std::move(k));
}

SubsetSumVerdict verify_sum_property(const std::vector<Int>& elements, int s, SumMode mode,
                                     const std::optional<Int>& modulus, std::uint64_t budget) {
    std::vector<Int> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("sum-property check expects distinct elements");
    return subset_sum_certificate(elements, modulus, s, budget, mode == SumMode::multiset);
}

RudinSet rudin_set(int s, const Int& p, std::uint64_t budget) {
    if (!is_prime(p)) throw InputError("p = " + p.str() + " is not prime");
    if (s < 2 || p <= s) throw InputError("need 2 <= s < p");

    RudinSet set;
    set.s = s;
    set.p = p;
    const Int sp = s * p;
    const std::size_t count = p.convert_to<std::size_t>();
    set.by_index.reserve(count);
    for (Int k = 0; k < p; ++k) {
        Int x = 0, base_pow = 1, k_pow = 1;
        for (int i = 0; i < s; ++i) {
            k_pow = mod_reduce(k_pow * k, p); // k^(i+1) mod p
            x += k_pow * base_pow;
            base_pow *= sp;
        }
        set.by_index.push_back(x);
    }
    set.elements = set.by_index;
    std::sort(set.elements.begin(), set.elements.end());

    SubsetSumVerdict check = verify_sum_property(set.elements, s, SumMode::multiset, std::nullopt, budget);
    if (!check.pass)
        throw ConsistencyError("constructed set fails its own sum-uniqueness property");
    set.verified_level = check.checked_up_to;
    return set;
}

Int prime_in_window(const Int& lo, const Int& hi) {
    if (lo < 2 || hi < 2 * lo)
        throw InputError("prime window needs lo >= 2 and hi >= 2*lo");
    for (Int q = lo + 1; q <= hi; ++q)
        if (is_prime(q)) return q;
    throw ConsistencyError("no prime in (" + lo.str() + ", " + hi.str() + "]");
}

GameMatrix rudin_game(int n, int s) {
    if (n < 2 || s < 2 || s > n) throw InputError("need 2 <= s <= n");
    Int n2 = Int(n) * n;
    Int p = prime_in_window(n2, 2 * n2);
    RudinSet set = rudin_set(s, p);
    Int d = 1;
    const Int sp = Int(s) * p;
    for (int i = 0; i < s; ++i) d *= sp;
    std::vector<Int> k(set.by_index.begin(), set.by_index.begin() + static_cast<std::size_t>(n) * n);
    return GameMatrix(n, n, std::move(d), std::move(k));
}

GirthEdgeBounds girth_edge_bounds(int n, int s) {
    if (n < 2 || s < 1 || s > n) throw InputError("need n >= 2 and 1 <= s <= n");
    GirthEdgeBounds out;

    // largest m with sum_{i=0}^{s} ((m-n)/n)^i <= n; monotone in m >= n
    Int m = n;
    for (;;) {
        Int next = m + 1;
        // sum (next-n)^i n^(s-i) <= n^(s+1), all integer
        Int diff = next - n, lhs = 0, diff_pow = 1;
        for (int i = 0; i <= s; ++i) {
            Int n_pow = 1;
            for (int t = 0; t < s - i; ++t) n_pow *= n;
            lhs += diff_pow * n_pow;
            diff_pow *= diff;
        }
        Int rhs = 1;
        for (int t = 0; t <= s; ++t) rhs *= n;
        if (lhs > rhs) break;
        m = next;
    }
    out.m_max_exact = m;

    // floor(n + n^(1+1/s)) = n + floor((n^(s+1))^(1/s)), exact in integers
    Int target = 1;
    for (int i = 0; i <= s; ++i) target *= n;
    Int root = 0;
    while (true) {
        Int next = root + 1, power = 1;
        for (int i = 0; i < s; ++i) power *= next;
        if (power > target) break;
        root = next;
    }
    out.m_max_simple = Int(n) + root;

    using Big = boost::multiprecision::cpp_bin_float_50;
    Big nb(n);

    Big bound = 2 * pow(nb, Big(-1) + Big(1) / s);
    if (bound > 1) bound = 1;
    out.pcl_bound_value = bound.convert_to<double>();
    // exact-rational enclosure: round the real bound up at 30 digits
    Big scaled = bound * pow(Big(10), 30);
    out.pcl_bound = Rat(ceil(scaled).convert_to<Int>(), pow(Int(10), 30));
    return out;
}

} // namespace lingame
