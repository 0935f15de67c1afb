#include "liescan/serialize.hpp"

namespace liescan {

using nlohmann::json;

void to_json(json& j, const CartanGroup& g) {
    j = json{{"name", g.name()},
             {"cartan", g.cartan_label()},
             {"class", std::string(1, cartan_letter(g.cartan_class()))},
             {"rank", g.rank()}};
}

void to_json(json& j, const IntPolynomial& p) {
    j = json::array();
    for (const mpz_class& c : p.coefficients()) j.push_back(c.get_str());
}

void to_json(json& j, const FGAbelianGroup& g) {
    j = json{{"free_rank", g.free_rank}, {"torsion", g.torsion}};
}

void to_json(json& j, const RNSolution& s) {
    j = json{{"b", s.b}, {"k", s.k.get_str()}};
}

void to_json(json& j, const QubitMatch& m) {
    j = json{{"n", m.n}, {"N", m.N.get_str()}, {"k", m.k.get_str()}};
}

void to_json(json& j, const PellSolution& s) {
    j = json{{"d", s.d.get_str()}, {"k", s.k.get_str()}};
}

void to_json(json& j, const ScreeningReport& r) {
    j = json{{"group_a", r.group_a},
             {"group_b", r.group_b},
             {"dims", json::array({r.dim_a, r.dim_b})},
             {"dims_match", r.dims_match},
             {"poly_equal", nullptr},
             {"poly_first_diff", nullptr},
             {"homotopy_range", nullptr},
             {"homotopy_witness", nullptr},
             {"verdict", verdict_name(r.verdict)}};
    if (r.poly) {
        j["poly_equal"] = r.poly->equal;
        if (r.poly->first_diff) {
            const CoeffDiff& d = *r.poly->first_diff;
            j["poly_first_diff"] = json{{"degree", d.degree},
                                        {"coeff_a", d.lhs.get_str()},
                                        {"coeff_b", d.rhs.get_str()}};
        }
    }
    if (r.homotopy) {
        if (r.homotopy->k_max >= 2) {
            j["homotopy_range"] = json::array({2, r.homotopy->k_max});
        }
        if (r.homotopy->witness) {
            const HomotopyWitness& w = *r.homotopy->witness;
            j["homotopy_witness"] = json{{"k", w.k},
                                         {"pi_a", w.pi_a},
                                         {"pi_b", w.pi_b},
                                         {"rendered", json::array({w.pi_a.render(), w.pi_b.render()})}};
        }
    }
}

}  // namespace liescan
