#pragma once

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "lnflag/geometric.hpp"
#include "lnflag/hopf.hpp"
#include "lnflag/io.hpp"

namespace lnflag {

// Verification sweeps shared by the CLI `verify` verb and the acceptance
// suite.  Every record names the identity checked and the input; sweeps are
// deterministic (fixed seeds), so reports are byte-stable.

struct VerifyRecord {
    std::string operation;
    std::string input;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyRecord> records;

    int checked() const { return static_cast<int>(records.size()); }

    int failures() const {
        int f = 0;
        for (const auto& r : records)
            if (!r.pass)
                ++f;
        return f;
    }

    bool all_passed() const { return failures() == 0; }

    void merge(const VerifyReport& o) {
        records.insert(records.end(), o.records.begin(), o.records.end());
    }
};

namespace verifydetail {

inline void check(VerifyReport& rep, std::string op, std::string input, bool ok,
                  std::string detail = "") {
    rep.records.push_back(VerifyRecord{std::move(op), std::move(input), ok, std::move(detail)});
}

inline void check_poly(VerifyReport& rep, std::string op, std::string input, const GPoly& lhs,
                       const GPoly& rhs) {
    bool ok = lhs == rhs;
    check(rep, std::move(op), std::move(input), ok,
          ok ? "" : render_poly(lhs, 'g') + "  !=  " + render_poly(rhs, 'g'));
}

inline void check_tensor(VerifyReport& rep, std::string op, std::string input, const GTensor& lhs,
                         const GTensor& rhs) {
    bool ok = lhs == rhs;
    check(rep, std::move(op), std::move(input), ok,
          ok ? "" : render_tensor(lhs, 'g') + "  !=  " + render_tensor(rhs, 'g'));
}

using Triple = std::map<std::tuple<ExponentSeq, ExponentSeq, ExponentSeq>, BigInt>;

inline void triple_add(Triple& t, const ExponentSeq& a, const ExponentSeq& b, const ExponentSeq& c,
                       const BigInt& v) {
    if (v == 0)
        return;
    auto key = std::make_tuple(a, b, c);
    auto [it, inserted] = t.try_emplace(key, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0)
            t.erase(it);
    }
}

inline Triple delta_on_first(const GTensor& t) {
    Triple out;
    for (const auto& [key, c] : t.terms()) {
        GTensor inner_cop = coproduct(GPoly::monomial(key.first));
        for (const auto& [inner, d] : inner_cop.terms())
            triple_add(out, inner.first, inner.second, key.second, c * d);
    }
    return out;
}

inline Triple delta_on_second(const GTensor& t) {
    Triple out;
    for (const auto& [key, c] : t.terms()) {
        GTensor inner_cop = coproduct(GPoly::monomial(key.second));
        for (const auto& [inner, d] : inner_cop.terms())
            triple_add(out, key.first, inner.first, inner.second, c * d);
    }
    return out;
}

// act_right(w, p) for every w at once, bucketing delta(p) by second factor.
inline std::map<ExponentSeq, GPoly> right_action_table(const GPoly& p) {
    std::map<ExponentSeq, GPoly> table;
    GTensor cop = coproduct(p);
    for (const auto& [key, c] : cop.terms())
        table[key.second].add_term(key.first, c);
    return table;
}

// act_left(w, p) for every w at once.
inline std::map<ExponentSeq, GPoly> left_action_table(const GPoly& p) {
    std::map<ExponentSeq, GPoly> table;
    GTensor cop = coproduct(p);
    for (const auto& [key, c] : cop.terms()) {
        GPoly chi = antipode(GPoly::monomial(key.first));
        for (const auto& [u, cu] : chi.terms())
            table[u].add_term(key.second, c * cu);
    }
    return table;
}

inline GPoly table_at(const std::map<ExponentSeq, GPoly>& table, const ExponentSeq& w) {
    auto it = table.find(w);
    return it == table.end() ? GPoly::zero() : it->second;
}

}  // namespace verifydetail

/// Coassociativity, both counit laws, both antipode identities, chi^2 = id
/// and chi multiplicativity over every monomial of grading <= max_grading.
inline VerifyReport verify_hopf_axioms(int max_grading) {
    using namespace verifydetail;
    VerifyReport rep{"hopf", {}};
    for (const ExponentSeq& w : sequences_up_to_grading(max_grading)) {
        GPoly p = GPoly::monomial(w);
        std::string input = "b^(" + w.str() + ")";
        GTensor cop = coproduct(p);

        Triple lhs = delta_on_first(cop), rhs = delta_on_second(cop);
        check(rep, "(delta x id) delta == (id x delta) delta", input, lhs == rhs);

        GPoly counit_left, counit_right;
        for (const auto& [key, c] : cop.terms()) {
            if (key.first.is_zero())
                counit_left.add_term(key.second, c);
            if (key.second.is_zero())
                counit_right.add_term(key.first, c);
        }
        check_poly(rep, "(counit x id) delta == id", input, counit_left, p);
        check_poly(rep, "(id x counit) delta == id", input, counit_right, p);

        GPoly anti_left, anti_right;
        for (const auto& [key, c] : cop.terms()) {
            anti_left += antipode(GPoly::monomial(key.first)) * GPoly::monomial(key.second) *
                         BigInt(c);
            anti_right += GPoly::monomial(key.first) * antipode(GPoly::monomial(key.second)) *
                          BigInt(c);
        }
        GPoly eps = GPoly::constant(counit(p));
        check_poly(rep, "sum chi(a1) a2 == counit(a)", input, anti_left, eps);
        check_poly(rep, "sum a1 chi(a2) == counit(a)", input, anti_right, eps);

        check_poly(rep, "chi(chi(a)) == a", input, antipode(antipode(p)), p);

        for (int i = 1; i <= w.max_index(); ++i) {
            if (w.at(i) == 0)
                continue;
            GPoly rest = GPoly::monomial(w - ExponentSeq::unit(i));
            check_poly(rep, "chi(a b_i) == chi(a) chi(b_i)", input,
                       antipode(p), antipode(rest) * antipode(GPoly::generator(i)));
        }
    }
    return rep;
}

/// Reversion/antipode consistency and the series-calculus invariants.
inline VerifyReport verify_series(int max_degree) {
    using namespace verifydetail;
    VerifyReport rep{"seriesalg", {}};
    std::vector<GPoly> chi = antipode_generators(max_degree);
    std::vector<GPoly> gbar = reversion(max_degree);

    for (int n = 1; n <= max_degree; ++n) {
        std::string input = "n=" + std::to_string(n);
        check_poly(rep, "chi(b_n) == gbar_n", input, chi[static_cast<std::size_t>(n)],
                   gbar[static_cast<std::size_t>(n)]);
        check_poly(rep, "(n+1) chi(b_n) == (b)^{-(n+1)}_n", input,
                   chi[static_cast<std::size_t>(n)] * BigInt(n + 1),
                   series_power_component(-(n + 1), n));
    }

    auto id = identity_series(max_degree);
    auto gen = generator_series(max_degree);
    auto compose_gg = substitute_series(gen, gbar, max_degree);
    auto compose_gbarg = substitute_series(gbar, gen, max_degree);
    auto revert_twice = revert_series(gbar, max_degree);
    for (int k = 0; k <= max_degree; ++k) {
        std::string input = "degree " + std::to_string(k);
        check_poly(rep, "g o gbar == identity", input, compose_gg[static_cast<std::size_t>(k)],
                   id[static_cast<std::size_t>(k)]);
        check_poly(rep, "gbar o g == identity", input, compose_gbarg[static_cast<std::size_t>(k)],
                   id[static_cast<std::size_t>(k)]);
        check_poly(rep, "reversion is an involution", input,
                   revert_twice[static_cast<std::size_t>(k)], gen[static_cast<std::size_t>(k)]);
    }

    for (int n = -4; n <= 4; ++n)
        for (int m = -4; m <= 4; ++m)
            for (int k = 0; k <= 8; ++k) {
                GPoly sum;
                for (int j = 0; j <= k; ++j)
                    sum += series_power_component(n, j) * series_power_component(m, k - j);
                check_poly(rep, "(b)^n (b)^m == (b)^{n+m} componentwise",
                           "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                               " k=" + std::to_string(k),
                           sum, series_power_component(n + m, k));
            }

    for (int k = 0; k <= 10; ++k) {
        GPoly sum;
        for (int j = 0; j <= k; ++j)
            sum += series_power_component(-1, j) * GPoly::generator(k - j);
        check_poly(rep, "(b)^{-1} is the multiplicative inverse", "k=" + std::to_string(k), sum,
                   k == 0 ? GPoly::one() : GPoly::zero());
    }
    return rep;
}

/// Involution, triangularity and the pinned small matrices of the
/// complement transform.
inline VerifyReport verify_lambda(int max_grading) {
    using namespace verifydetail;
    VerifyReport rep{"lambda", {}};
    for (int g = 0; g <= max_grading; g += 2) {
        LambdaMatrix lm = lambda_matrix(g);
        std::size_t n = lm.basis.size();
        std::string input = "grading " + std::to_string(g);

        bool involution = true;
        for (std::size_t r = 0; r < n && involution; ++r)
            for (std::size_t c = 0; c < n && involution; ++c) {
                BigInt v = 0;
                for (std::size_t k = 0; k < n; ++k)
                    v += lm.entries[r][k] * lm.entries[k][c];
                involution = v == (r == c ? 1 : 0);
            }
        check(rep, "lambda^2 == identity", input, involution);

        // The transform never increases the part count: lambda_{psi,omega} = 0
        // unless sum omega_i <= sum psi_i (and gradings match by construction).
        bool triangular = true;
        for (std::size_t r = 0; r < n && triangular; ++r)
            for (std::size_t c = 0; c < n && triangular; ++c)
                if (lm.entries[r][c] != 0 &&
                    lm.basis[c].part_count() > lm.basis[r].part_count())
                    triangular = false;
        check(rep, "lambda_{psi,omega} == 0 unless sum omega <= sum psi", input, triangular);

        // m -> e -> m round trip is the identity on every basis element.
        int d = g / 2;
        for (const ExponentSeq& psi : lm.basis) {
            if (d == 0)
                break;
            auto in_e = symdetail::to_elementary(symdetail::monomial_sym(psi, d), d);
            symdetail::VarPoly back;
            for (const auto& [pow, c] : in_e) {
                symdetail::VarPoly term = symdetail::expand_e_monomial(pow, d);
                for (const auto& [m, cc] : term)
                    symdetail::vp_add(back, m, c * cc);
            }
            check(rep, "m -> e -> m round trip", input + " psi=" + psi.str(),
                  symdetail::collect_m(back) == SymExpr::monomial(psi));
        }
    }

    if (max_grading >= 2) {
        LambdaMatrix lm2 = lambda_matrix(2);
        check(rep, "grading-2 matrix == [[-1]]", "grading 2",
              lm2.entries.size() == 1 && lm2.entries[0][0] == -1);
    }
    if (max_grading >= 4) {
        LambdaMatrix lm4 = lambda_matrix(4);
        bool ok = lm4.basis.size() == 2 && lm4.basis[0] == ExponentSeq({2}) &&
                  lm4.basis[1] == ExponentSeq::unit(2) && lm4.entries[0][0] == 1 &&
                  lm4.entries[0][1] == 1 && lm4.entries[1][0] == 0 && lm4.entries[1][1] == -1;
        check(rep, "grading-4 matrix == [[1,1],[0,-1]]", "grading 4", ok);
    }
    return rep;
}

/// The central sweep: geometric, Hopf-algebraic and characteristic-number
/// paths agree on every action, for all Q in [n], n <= max_n, and all
/// operation indices of grading <= 2n.
inline VerifyReport verify_three_path(int max_n) {
    using namespace verifydetail;
    VerifyReport rep{"three-path", {}};
    for (int n = 1; n <= max_n; ++n) {
        auto ops = sequences_up_to_grading(2 * n);
        std::vector<SymExpr> rows;
        rows.reserve(ops.size());
        for (const auto& psi : ops)
            rows.push_back(complement_transform(psi));
        for (const SubsetQ& q : all_subsets(n)) {
            GPoly tq = GPoly::monomial(q.type());
            auto right_table = right_action_table(tq);
            auto left_table = left_action_table(tq);
            std::string base = q.str();

            for (std::size_t pi = 0; pi < ops.size(); ++pi) {
                const ExponentSeq& psi = ops[pi];
                std::string input = base + " psi=" + psi.str();
                GPoly geom = geom_act_left(q, psi);
                GPoly hopf;
                for (const auto& [w, lambda] : rows[pi].terms())
                    hopf += table_at(left_table, w) * lambda;
                GPoly oracle = char_number(q, psi, ExponentSeq());
                check_poly(rep, "left: geometric == hopf", input, geom, hopf);
                check_poly(rep, "left: geometric == char-number", input, geom, oracle);
                int g = 0;
                check(rep, "left: homogeneous of grading 2|Q|-|psi|", input,
                      geom.is_homogeneous(&g) &&
                          (geom.is_zero() || g == 2 * q.size() - psi.grading()));
            }

            for (const ExponentSeq& omega : ops) {
                std::string input = base + " omega=" + omega.str();
                GPoly geom = geom_act_right(q, omega);
                GPoly hopf = table_at(right_table, omega);
                GPoly oracle = char_number(q, ExponentSeq(), omega);
                check_poly(rep, "right: geometric == hopf", input, geom, hopf);
                check_poly(rep, "right: geometric == char-number", input, geom, oracle);
                int g = 0;
                check(rep, "right: homogeneous of grading 2|Q|-|omega|", input,
                      geom.is_homogeneous(&g) &&
                          (geom.is_zero() || g == 2 * q.size() - omega.grading()));
            }

            for (std::size_t pi = 0; pi < ops.size(); ++pi) {
                const ExponentSeq& psi = ops[pi];
                for (const ExponentSeq& omega : ops) {
                    std::string input =
                        base + " psi=" + psi.str() + " omega=" + omega.str();
                    GPoly geom = geom_act_both(q, psi, omega);
                    GPoly oracle = char_number(q, psi, omega);
                    check_poly(rep, "both: geometric == char-number", input, geom, oracle);
                    GPoly hopf;
                    {
                        GPoly intermediate = table_at(right_table, omega);
                        auto lt = left_action_table(intermediate);
                        for (const auto& [w, lambda] : rows[pi].terms())
                            hopf += table_at(lt, w) * lambda;
                    }
                    check_poly(rep, "both: geometric == hopf", input, geom, hopf);
                    int g = 0;
                    check(rep, "both: homogeneous of grading 2|Q|-|psi|-|omega|", input,
                          geom.is_homogeneous(&g) &&
                              (geom.is_zero() ||
                               g == 2 * q.size() - psi.grading() - omega.grading()));
                }
            }
        }
    }
    return rep;
}

/// Coproduct and antipode realization against the Hopf structure maps.
inline VerifyReport verify_realization(int max_n_coproduct, int max_n_antipode) {
    using namespace verifydetail;
    VerifyReport rep{"realization", {}};
    for (int n = 0; n <= max_n_coproduct; ++n)
        for (const SubsetQ& q : all_subsets(n))
            check_tensor(rep, "geom_coproduct(Q) == delta(g^type Q)", q.str(), geom_coproduct(q),
                         coproduct(GPoly::monomial(q.type())));
    for (int n = 0; n <= max_n_antipode; ++n)
        for (const SubsetQ& q : all_subsets(n))
            check_poly(rep, "geom_antipode(Q) == chi(g^type Q)", q.str(), geom_antipode(q),
                       antipode(GPoly::monomial(q.type())));
    return rep;
}

/// Twisted single-interval classes and the vanishing of the right action on
/// generators away from epsilon sequences.
inline VerifyReport verify_twisted_classes(int max_n) {
    using namespace verifydetail;
    VerifyReport rep{"twisted-classes", {}};
    for (int n = 1; n <= max_n; ++n) {
        SubsetQ full = SubsetQ::full(n);
        for (int m = 0; m <= n; ++m) {
            std::string input = "n=" + std::to_string(n) + " m=" + std::to_string(m);
            std::vector<int> base;
            for (int i = m + 1; i <= n; ++i)
                base.push_back(i);
            GPoly twisted = eval_twisted(TwistedClass(SubsetQ(n, base), {m}, full), full);
            GPoly expected = series_power_component(m + 1, n - m);
            ExponentSeq omega = m == 0 ? ExponentSeq() : ExponentSeq::unit(m);
            check_poly(rep, "eval_twisted == (g)^{m+1}_{n-m}", input, twisted, expected);
            check_poly(rep, "char_number([n],0,eps(m)) == (g)^{m+1}_{n-m}", input,
                       char_number(full, ExponentSeq(), omega), expected);
            check_poly(rep, "geom_act_right([n],eps(m)) == (g)^{m+1}_{n-m}", input,
                       geom_act_right(full, omega), expected);
        }
        for (const ExponentSeq& omega : sequences_up_to_grading(2 * n)) {
            if (omega.part_count() <= 1)
                continue;  // epsilon sequences and 0 are the nonvanishing cases
            std::string input = "n=" + std::to_string(n) + " omega=" + omega.str();
            check_poly(rep, "geom_act_right([n],omega) == 0", input, geom_act_right(full, omega),
                       GPoly::zero());
            check_poly(rep, "char_number([n],0,omega) == 0", input,
                       char_number(full, ExponentSeq(), omega), GPoly::zero());
        }
    }
    return rep;
}

/// Closed form of the left action on epsilon(m).
inline VerifyReport verify_left_closed_form(int max_n, int max_m) {
    using namespace verifydetail;
    VerifyReport rep{"left-closed-form", {}};
    for (int n = 1; n <= max_n; ++n)
        for (const SubsetQ& q : all_subsets(n))
            for (int m = 1; m <= max_m; ++m)
                check_poly(rep, "closed form == geom_act_left",
                           q.str() + " m=" + std::to_string(m), left_action_closed_form(q, m),
                           geom_act_left(q, ExponentSeq::unit(m)));
    return rep;
}

/// Kronecker duality <x^Q, x_R> = delta_{Q,R} and pushforward of the unit.
inline VerifyReport verify_duality(int max_n_pairs, int max_n_push) {
    using namespace verifydetail;
    VerifyReport rep{"duality", {}};
    for (const SubsetQ& r : all_subsets(max_n_pairs)) {
        FlagContext ctx{r};
        for (const SubsetQ& q : all_subsets(max_n_pairs)) {
            FlagElem elem = q.is_subset_of(r) ? FlagElem::monomial(ctx, q) : FlagElem::zero(ctx);
            BigInt expected = q == r ? 1 : 0;
            check(rep, "<x^Q, x_R> == delta_{Q,R}",
                  "Q=" + q.str() + " R=" + r.str(), kronecker_U(elem) == expected);
        }
    }
    for (int n = 1; n <= max_n_push; ++n)
        check_poly(rep, "pushforward(1) over B_n == g_n", "n=" + std::to_string(n),
                   pushforward(FlagElem::unit(FlagContext::bounded_flag(n))),
                   GPoly::generator(n));
    return rep;
}

/// Left/right coefficient lists of the projection to projective space agree
/// after the basis conversion.
inline VerifyReport verify_projection(int max_n) {
    using namespace verifydetail;
    VerifyReport rep{"projection", {}};
    for (int n = 1; n <= max_n; ++n)
        for (int h = 1; h <= n; ++h) {
            std::string input = "n=" + std::to_string(n) + " h=" + std::to_string(h);
            ProjectionCoefficients sc = projection_coefficients(n, h);
            bool left_ok = true;
            for (int m = 0; m <= n + 1 - h; ++m)
                left_ok = left_ok &&
                          sc.left[static_cast<std::size_t>(m)] == GPoly::generator(n - m);
            check(rep, "left coefficients == g_{n-m}", input, left_ok);
            auto converted = convert_left_to_right(sc.left);
            bool conv_ok = converted.size() == sc.right.size();
            for (std::size_t m = 0; conv_ok && m < converted.size(); ++m)
                conv_ok = converted[m] == sc.right[m];
            check(rep, "converted left list == right list", input, conv_ok);
        }
    return rep;
}

/// Rewrite confluence under randomized reduction order, and the 2^n basis.
inline VerifyReport verify_ring(int trials, int max_n, int max_degree, unsigned seed = 12345) {
    using namespace verifydetail;
    VerifyReport rep{"ring", {}};
    std::mt19937 rng(seed);
    int mismatches = 0;
    for (int t = 0; t < trials; ++t) {
        int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
        SubsetQ q = SubsetQ::from_mask(n, rng() % (1u << n));
        int degree = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_degree));
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        for (int d = 0; d < degree; ++d)
            ++exps[rng() % static_cast<unsigned>(n)];
        auto leftmost = flagdetail::reduce_monomial(exps, q);
        for (int rep_i = 0; rep_i < 3; ++rep_i) {
            auto random_order = flagdetail::reduce_monomial_random_order(exps, q, rng);
            if (random_order != leftmost)
                ++mismatches;
        }
    }
    check(rep, "rewrite order independence", std::to_string(trials) + " randomized instances",
          mismatches == 0, mismatches == 0 ? "" : std::to_string(mismatches) + " mismatches");

    for (int n = 1; n <= 10; ++n) {
        SubsetQ full = SubsetQ::full(n);
        bool ok = true;
        std::size_t count = 0;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> exps(static_cast<std::size_t>(n), 0);
            for (int i = 1; i <= n; ++i)
                if (mask & (1u << (i - 1)))
                    exps[static_cast<std::size_t>(i) - 1] = 1;
            auto nf = flagdetail::reduce_monomial(exps, full);
            ok = ok && nf && *nf == mask;
            ++count;
        }
        check(rep, "2^n square-free basis monomials", "n=" + std::to_string(n),
              ok && count == (std::size_t{1} << n));
    }
    return rep;
}

/// Module-level action axioms: convolution composition, left/right
/// commutation and reconstruction of the coproduct from the right action.
inline VerifyReport verify_actions(int max_op_grading, int max_poly_grading) {
    using namespace verifydetail;
    VerifyReport rep{"actions", {}};
    auto ops = sequences_up_to_grading(max_op_grading);
    for (const ExponentSeq& w : sequences_up_to_grading(max_poly_grading)) {
        GPoly p = GPoly::monomial(w);
        std::string base = "p=b^(" + w.str() + ")";
        auto right_table = right_action_table(p);
        auto left_table = left_action_table(p);

        for (const ExponentSeq& omega : ops) {
            if (omega.is_zero())
                continue;
            for (const ExponentSeq& psi : ops) {
                if (psi.is_zero())
                    continue;
                std::string input =
                    base + " s=" + omega.str() + " t=" + psi.str();
                int conv_grading = omega.grading() + psi.grading();
                GPoly conv_right, conv_left;
                for (const ExponentSeq& theta : sequences_of_grading(conv_grading)) {
                    BigInt c = coproduct(GPoly::monomial(theta)).coefficient(omega, psi);
                    if (c == 0)
                        continue;
                    conv_right += table_at(right_table, theta) * c;
                    conv_left += table_at(left_table, theta) * c;
                }
                check_poly(rep, "(s t)_r == s_r o t_r", input, conv_right,
                           act_right(omega, table_at(right_table, psi)));
                check_poly(rep, "(s t)_l == s_l o t_l", input, conv_left,
                           act_left(omega, table_at(left_table, psi)));
                check_poly(rep, "left and right actions commute", input,
                           act_left(psi, table_at(right_table, omega)),
                           act_right(omega, table_at(left_table, psi)));
            }
        }

        if (w.grading() <= 10) {
            GTensor rebuilt;
            for (const auto& [omega, part] : right_table)
                rebuilt += GTensor::tensor(part, GPoly::monomial(omega));
            check_tensor(rep, "delta rebuilt from the right action", base, rebuilt, coproduct(p));
        }
    }
    return rep;
}

/// Pinned regression values across all modules, each also recomputed through
/// an independent route (characteristic-number oracle or direct expansion)
/// where one exists.
inline VerifyReport verify_goldens() {
    using namespace verifydetail;
    VerifyReport rep{"goldens", {}};
    const ExponentSeq e1 = ExponentSeq::unit(1), e2 = ExponentSeq::unit(2);
    const ExponentSeq zero;
    const GPoly b1 = GPoly::generator(1), b2 = GPoly::generator(2);

    // combinatorics
    check(rep, "h_set((1,0),2) == {2}", "h=(1,0) n=2",
          h_set(TwistSeq({1, 0}), 2) == SubsetQ(2, {2}));
    check(rep, "h_set((0,1),2) == {1}", "h=(0,1) n=2",
          h_set(TwistSeq({0, 1}), 2) == SubsetQ(2, {1}));
    check(rep, "apply_hQ((1,0),[2]) == {2}", "h=(1,0) Q=[2]",
          apply_hQ(TwistSeq({1, 0}), SubsetQ::full(2)) == SubsetQ(2, {2}));
    {
        bool threw = false;
        try {
            apply_hQ(TwistSeq({2}), SubsetQ::full(1));
        } catch (const InadmissibleTwist&) {
            threw = true;
        }
        check(rep, "apply_hQ((2),[1]) signals Inadmissible", "h=(2) Q=[1]", threw);
        check_poly(rep, "oracle <x_1^2, x_[1]> == 0 confirms the omission", "Q=[1] psi=eps(2)",
                   char_number(SubsetQ::full(1), e2, zero), GPoly::zero());
    }
    {
        SubsetQ q(4, {1, 2, 4});
        check(rep, "support_S(h_1=2, {1,2,4}) == {2}", "h=(2,0,0,0)",
              support_S(TwistSeq({2, 0, 0, 0}), q) == std::vector<int>{2});
        check(rep, "support_S(h_4=1, {1,2,4}) == {1}", "h=(0,0,0,1)",
              support_S(TwistSeq({0, 0, 0, 1}), q) == std::vector<int>{1});
    }
    check(rep, "K([2],eps(1)) == {(1,0)}", "Q=[2]",
          enumerate_block(SubsetQ::full(2), e1, BlockKind::K) ==
              std::vector<TwistSeq>{TwistSeq({1, 0})});
    check(rep, "H([2],eps(1)) == {(1,0),(0,1)}", "Q=[2]",
          enumerate_block(SubsetQ::full(2), e1, BlockKind::H) ==
              std::vector<TwistSeq>{TwistSeq({1, 0}), TwistSeq({0, 1})});
    check(rep, "K([4],(2)) is empty", "Q=[4] omega=(2)",
          enumerate_block(SubsetQ::full(4), ExponentSeq({2}), BlockKind::K).empty());

    // seriesalg
    check_poly(rep, "(b)^{-2}_1 == -2 b_1", "n=-2 k=1", series_power_component(-2, 1), -2 * b1);
    check_poly(rep, "(b)^3_1 == 3 b_1", "n=3 k=1", series_power_component(3, 1), 3 * b1);
    check_poly(rep, "(b)^2_2 == 2 b_2 + b_1^2", "n=2 k=2", series_power_component(2, 2),
               2 * b2 + b1 * b1);
    {
        auto gbar = reversion(2);
        check_poly(rep, "gbar_1 == -g_1", "reversion", gbar[1], -b1);
        check_poly(rep, "gbar_2 == 2 g_1^2 - g_2", "reversion", gbar[2], 2 * b1 * b1 - b2);
    }

    // symmfun
    check(rep, "complement(eps(1)) == -m_{eps(1)}", "psi=eps(1)",
          complement_transform(e1) == SymExpr::monomial(e1, -1));
    check(rep, "complement(eps(2)) == -m_{eps(2)}", "psi=eps(2)",
          complement_transform(e2) == SymExpr::monomial(e2, -1));
    {
        SymExpr expected = SymExpr::monomial(ExponentSeq({2}));
        expected.add_term(e2, 1);
        check(rep, "complement((2)) == m_{(2)} + m_{eps(2)}", "psi=(2)",
              complement_transform(ExponentSeq({2})) == expected);
    }

    // hopf
    check_tensor(rep, "delta(b_1)", "b_1", coproduct(b1),
                 GTensor::tensor(b1, GPoly::one()) + GTensor::tensor(GPoly::one(), b1));
    check_tensor(rep, "delta(b_2)", "b_2", coproduct(b2),
                 GTensor::tensor(b2, GPoly::one()) + GTensor::tensor(2 * b1, b1) +
                     GTensor::tensor(GPoly::one(), b2));
    check_tensor(rep, "delta(b_1^2)", "b_1^2", coproduct(b1 * b1),
                 GTensor::tensor(b1 * b1, GPoly::one()) + GTensor::tensor(2 * b1, b1) +
                     GTensor::tensor(GPoly::one(), b1 * b1));
    check_poly(rep, "chi(b_1) == -b_1", "b_1", antipode(b1), -b1);
    check_poly(rep, "chi(b_2) == 2 b_1^2 - b_2", "b_2", antipode(b2), 2 * b1 * b1 - b2);
    check_poly(rep, "act_right(eps(1), b_2) == 2 b_1", "b_2", act_right(e1, b2), 2 * b1);
    check_poly(rep, "act_right(eps(1), b_2 b_1) == 2 b_1^2 + b_2", "b_2 b_1",
               act_right(e1, b2 * b1), 2 * b1 * b1 + b2);
    check_poly(rep, "act_left(eps(1), b_1) == -1", "b_1", act_left(e1, b1),
               GPoly::constant(-1));
    check_poly(rep, "act_left(eps(1), b_2) == -2 b_1", "b_2", act_left(e1, b2), -2 * b1);
    check_poly(rep, "tangential act_left(eps(1), b_1) == 1", "b_1", act_left_tangential(e1, b1),
               GPoly::one());
    check_poly(rep, "tangential act_left(eps(1), b_2) == 2 b_1", "b_2",
               act_left_tangential(e1, b2), 2 * b1);
    check_poly(rep, "ad(eps(1))(b_1) == 0", "b_1", act_adjoint(e1, b1), GPoly::zero());
    check_poly(rep, "ad(eps(1))(b_2) == 0", "b_2", act_adjoint(e1, b2), GPoly::zero());

    // flagring
    {
        FlagContext b2ctx = FlagContext::bounded_flag(2);
        FlagElem x1 = FlagElem::generator(b2ctx, 1), x2 = FlagElem::generator(b2ctx, 2);
        check(rep, "x_1 x_1 in B_2 == x^{[1,2]}", "B_2",
              x1 * x1 == FlagElem::monomial(b2ctx, SubsetQ::full(2)));
        check(rep, "x_2 x_2 in B_2 == 0", "B_2", (x2 * x2).is_zero());
        check(rep, "B_2 right class of x_1", "B_2",
              right_class(b2ctx, 1) ==
                  FlagElem::monomial(b2ctx, SubsetQ(2, {1})) +
                      FlagElem::monomial(b2ctx, SubsetQ::full(2), GPoly::generator(1)));
        check(rep, "B_2 right class of x_2", "B_2",
              right_class(b2ctx, 2) == FlagElem::monomial(b2ctx, SubsetQ(2, {2})));
        check_poly(rep, "pi_!(x_{1}) in B_2 == g_1", "B_2",
                   pushforward(FlagElem::monomial(b2ctx, SubsetQ(2, {1}))), b1);
        check(rep, "<1, x_[2]> == 0", "B_2", kronecker_U(FlagElem::unit(b2ctx)) == 0);
    }
    {
        FlagContext b3ctx = FlagContext::bounded_flag(3);
        FlagElem x1 = FlagElem::generator(b3ctx, 1);
        check(rep, "x_1^3 in B_3 == x^{[1,3]}", "B_3",
              x1.pow(3) == FlagElem::monomial(b3ctx, SubsetQ::full(3)));
        check_poly(rep, "pi_!(x^{[3]}) in B_3 == 1", "B_3",
                   pushforward(FlagElem::monomial(b3ctx, SubsetQ::full(3))), GPoly::one());
    }
    {
        FlagContext ctx{SubsetQ(3, {1, 3})};
        FlagElem x1 = FlagElem::generator(ctx, 1), x3 = FlagElem::generator(ctx, 3);
        check(rep, "x_1 x_3 in Q={1,3} == x^{{1,3}}", "Q={1,3}",
              x1 * x3 == FlagElem::monomial(ctx, SubsetQ(3, {1, 3})));
        check(rep, "<x^{{1}}, x_{{1,3}}> == 0", "Q={1,3}",
              kronecker_U(FlagElem::monomial(ctx, SubsetQ(3, {1}))) == 0);
        check(rep, "<x^Q, x_Q> == 1", "Q={1,3}",
              kronecker_U(FlagElem::monomial(ctx, SubsetQ(3, {1, 3}))) == 1);
    }
    {
        FlagContext ctx{SubsetQ(4, {1, 2, 4})};
        check_poly(rep, "pi_!(1) in Q={1,2,4} == g_2 g_1", "Q={1,2,4}",
                   pushforward(FlagElem::unit(ctx)), b2 * b1);
        check_poly(rep, "char_number({1,2,4},0,0) == g^type", "Q={1,2,4}",
                   char_number(ctx.q, zero, zero), b2 * b1);
    }
    check_poly(rep, "char_number([2],eps(1),0) == 2 g_1", "Q=[2]",
               char_number(SubsetQ::full(2), e1, zero), 2 * b1);
    {
        FlagContext b1ctx = FlagContext::bounded_flag(1);
        check(rep, "y_1 == -x_1 in B_1", "n=1",
              y_to_x(b1ctx, 1) == FlagElem::monomial(b1ctx, SubsetQ(1, {1}), GPoly::constant(-1)));
        FlagContext b2ctx = FlagContext::bounded_flag(2);
        FlagElem y1 = FlagElem::monomial(b2ctx, SubsetQ(2, {1}), GPoly::constant(-1)) +
                      FlagElem::monomial(b2ctx, SubsetQ(2, {2}));
        check(rep, "y_1 == -x_1 + x_2 in B_2", "n=2", y_to_x(b2ctx, 1) == y1);
        check(rep, "y_2 == -x_2 in B_2", "n=2",
              y_to_x(b2ctx, 2) ==
                  FlagElem::monomial(b2ctx, SubsetQ(2, {2}), GPoly::constant(-1)));
    }
    {
        auto yy = intersect(VarietyKind::Y, SubsetQ(2, {2}), VarietyKind::Y, SubsetQ(2, {1}),
                            2);
        check(rep, "Y_{{1}'} n Y_{{2}'} == Y_0 in [2]", "n=2",
              yy && yy->kind == VarietyKind::Y && yy->subset == SubsetQ::empty(2) &&
                  yy->context_subset == SubsetQ::full(2));
        auto xy = intersect(VarietyKind::X, SubsetQ::full(2), VarietyKind::Y, SubsetQ(2, {2}),
                            2);
        check(rep, "X_[2] n Y_{2} == X_{2} in context {2}", "n=2",
              xy && xy->kind == VarietyKind::X && xy->subset == SubsetQ(2, {2}) &&
                  xy->context_subset == SubsetQ(2, {2}));
        bool threw = false;
        try {
            intersect(VarietyKind::X, SubsetQ(3, {1}), VarietyKind::X, SubsetQ(3, {2}), 3);
        } catch (const NotCoveredError&) {
            threw = true;
        }
        check(rep, "X_{1} n X_{2} in [3] signals NotCovered", "n=3", threw);
    }

    // georeal
    check_poly(rep, "eval_twisted([2]->{2}, m=1) == 2 g_1", "Q=[2]",
               eval_twisted(TwistedClass(SubsetQ(2, {2}), {1}, SubsetQ::full(2)),
                            SubsetQ::full(2)),
               2 * b1);
    check_poly(rep, "geom_act_right([2],eps(1)) == 2 g_1", "Q=[2]",
               geom_act_right(SubsetQ::full(2), e1), 2 * b1);
    check_poly(rep, "geom_act_right({1,2,4},eps(1)) == 2 g_1^2 + g_2", "Q={1,2,4}",
               geom_act_right(SubsetQ(4, {1, 2, 4}), e1), 2 * b1 * b1 + b2);
    check_poly(rep, "geom_act_left([2],eps(1)) == 2 g_1", "Q=[2]",
               geom_act_left(SubsetQ::full(2), e1), 2 * b1);
    check_poly(rep, "geom_act_left([1],eps(2)) == 0", "Q=[1]",
               geom_act_left(SubsetQ::full(1), e2), GPoly::zero());
    check_poly(rep, "geom_act_left([3],eps(1)) == 3 g_2", "Q=[3]",
               geom_act_left(SubsetQ::full(3), e1), 3 * b2);
    check_poly(rep, "geom_act_both([2],eps(1),eps(1)) == char_number", "Q=[2]",
               geom_act_both(SubsetQ::full(2), e1, e1),
               char_number(SubsetQ::full(2), e1, e1));
    check_tensor(rep, "geom_coproduct([1]) == delta(b_1)", "Q=[1]",
                 geom_coproduct(SubsetQ::full(1)), coproduct(b1));
    check_tensor(rep, "geom_coproduct([2]) == delta(b_2)", "Q=[2]",
                 geom_coproduct(SubsetQ::full(2)), coproduct(b2));
    check_tensor(rep, "geom_coproduct(empty) == 1 x 1", "Q={}",
                 geom_coproduct(SubsetQ::empty(0)), GTensor::unit());
    check_poly(rep, "geom_antipode([1]) == -g_1", "Q=[1]", geom_antipode(SubsetQ::full(1)), -b1);
    check_poly(rep, "geom_antipode([2]) == 2 g_1^2 - g_2", "Q=[2]",
               geom_antipode(SubsetQ::full(2)), 2 * b1 * b1 - b2);
    check_poly(rep, "geom_antipode({1,3}) == g_1^2", "Q={1,3}",
               geom_antipode(SubsetQ(3, {1, 3})), b1 * b1);
    {
        ProjectionCoefficients sc = projection_coefficients(2, 1);
        bool ok = sc.left.size() == 3 && sc.left[0] == b2 && sc.left[1] == b1 &&
                  sc.left[2] == GPoly::one();
        check(rep, "projection n=2 h=1 left list == (g_2, g_1, 1)", "n=2 h=1", ok);
        ProjectionCoefficients sc2 = projection_coefficients(2, 2);
        check(rep, "projection n=2 h=2 left list == (g_2, g_1)", "n=2 h=2",
              sc2.left.size() == 2 && sc2.left[0] == b2 && sc2.left[1] == b1);
    }
    check_poly(rep, "act on subset example == 2 g_1^2 + g_2", "Q={1,2,4} side=right op=eps(1)",
               act_right(e1, GPoly::monomial(SubsetQ(4, {1, 2, 4}).type())),
               2 * b1 * b1 + b2);
    return rep;
}

}  // namespace lnflag
