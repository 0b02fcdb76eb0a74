#include "nka/catalogue.hpp"

#include <sstream>

#include "nka/field.hpp"
#include "nka/orders.hpp"

namespace nka {

std::vector<CatalogueRow> norm_catalogue(int depth) {
    std::vector<CatalogueRow> rows;
    auto add = [&](const std::string& family, const std::string& params,
                   const GroupDescriptor& g, long p) {
        auto verdict = amenability_norm(g, field_from_label("Qp:" + std::to_string(p)), depth);
        rows.push_back({family, params, p, verdict.norm, verdict.certified,
                        reason_tag(verdict.reason)});
    };

    const auto gl = GroupDescriptor::family("gl_chain", {{"ell", 3}, {"a", 3}});
    for (long p : {2, 3, 5}) add("gl_chain", "ell=3;a=3;n=2", gl, p);

    const auto psl = GroupDescriptor::family("psl_chain", {{"ell", 3}, {"a", 3}});
    for (long p : {2, 3}) add("psl_chain", "ell=3;a=3;n=2", psl, p);

    const auto sz = GroupDescriptor::family("sz_chain", {{"a", 3}});
    for (long p : {2, 3, 5}) add("sz_chain", "a=3", sz, p);

    const auto tree = GroupDescriptor::family("tree_fix", {{"d", 3}});
    for (long p : {2, 3, 5}) add("tree_fix", "d=3", tree, p);

    const auto prufer2 = GroupDescriptor::family("prufer", {{"p", 2}});
    for (long p : {2, 3}) add("prufer", "p=2", prufer2, p);

    const auto z3 = GroupDescriptor::family("z_ell", {{"ell", 3}});
    for (long p : {2, 3}) add("z_ell", "ell=3", z3, p);

    const auto q3 = GroupDescriptor::family("q_ell", {{"ell", 3}});
    for (long p : {2, 3}) add("q_ell", "ell=3", q3, p);

    // integral 2x2 matrix group over the 3-adic integers: a pro-3 kernel
    // (trivial 2-exponent) under the finite quotient of order |GL_2(F_3)|
    const auto glo = GroupDescriptor::extension(
        GroupDescriptor::family("z_ell", {{"ell", 3}}),
        GroupDescriptor::finite(gl_order(2, Integer(3))));
    for (long p : {2, 3}) add("gl_integers", "n=2;q=3", glo, p);

    return rows;
}

std::string catalogue_csv(const std::vector<CatalogueRow>& rows) {
    std::ostringstream out;
    out << "family,params,prime,norm,certified,theorem_tag\n";
    for (const auto& r : rows)
        out << r.family << "," << r.params << "," << r.prime << "," << r.norm.str() << ","
            << (r.certified ? "true" : "false") << "," << r.rule << "\n";
    return out.str();
}

}  // namespace nka
