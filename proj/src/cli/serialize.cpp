#include <branges/serialize.hpp>

#include <stdexcept>

namespace branges {

Json rat_json(const Rat& r)
{
    return Json::array({r.num().get_str(), r.den().get_str()});
}

Rat rat_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("rational must be a [num, den] pair");
    return Rat(Int(j[0].get<std::string>()), Int(j[1].get<std::string>()));
}

Json poly_json(const Poly& p)
{
    Json a = Json::array();
    for (const auto& c : p.coeffs())
        a.push_back(rat_json(c));
    return a;
}

Poly poly_from_json(const Json& j)
{
    std::vector<Rat> c;
    for (const auto& x : j)
        c.push_back(rat_from_json(x));
    return Poly(std::move(c));
}

Json bipoly_json(const BiPoly& p)
{
    Rat ct = p.is_zero() ? Rat(1) : content(p);
    Json rows = Json::array();
    for (const auto& q : p.by_n()) {
        Json row = Json::array();
        for (const auto& a : q.coeffs()) {
            Rat v = a / ct;
            row.push_back(v.num().get_str());
        }
        rows.push_back(std::move(row));
    }
    return {{"content", rat_json(ct)}, {"coeffs", rows}};
}

BiPoly bipoly_from_json(const Json& j)
{
    Rat ct = rat_from_json(j.at("content"));
    std::vector<Poly> by_n;
    for (const auto& row : j.at("coeffs")) {
        std::vector<Rat> c;
        for (const auto& x : row)
            c.push_back(Rat(Int(x.get<std::string>())) * ct);
        by_n.emplace_back(std::move(c));
    }
    return BiPoly(std::move(by_n));
}

Json ratfunc2_json(const RatFunc2& f)
{
    return {{"num", bipoly_json(f.num())}, {"den", bipoly_json(f.den())}, {"text", f.str()}};
}

Json recop_json(const RecOp& op)
{
    Json c = Json::array();
    for (const auto& p : op.coeffs())
        c.push_back(bipoly_json(p));
    return {{"order", op.order()}, {"coeffs", c}, {"text", op.str()}};
}

namespace {

const char* kind_name(TableKind k)
{
    return k == TableKind::A ? "A" : "B";
}

} // namespace

Json table_json(const CoeffTable& t)
{
    Json rows = Json::array();
    for (int n = 0; n <= t.maxN(); ++n) {
        Json row = Json::array();
        for (int k = 0; k <= n; ++k)
            row.push_back(poly_json(t.at(k, n)));
        rows.push_back(std::move(row));
    }
    return {{"kind", kind_name(t.kind())},
            {"maxN", t.maxN()},
            {"convention", t.convention()},
            {"rows", rows}};
}

CoeffTable table_from_json(const Json& j)
{
    std::string kind = j.at("kind").get<std::string>();
    if (kind != "A" && kind != "B")
        throw std::invalid_argument("unknown table kind " + kind);
    if (j.at("convention").get<std::string>() != kDoubledK0)
        throw std::invalid_argument("unsupported table convention");
    CoeffTable t(kind == "A" ? TableKind::A : TableKind::B, j.at("maxN").get<int>());
    const Json& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != t.maxN() + 1)
        throw std::invalid_argument("table row count does not match maxN");
    for (int n = 0; n <= t.maxN(); ++n) {
        const Json& row = rows[static_cast<std::size_t>(n)];
        if (static_cast<int>(row.size()) != n + 1)
            throw std::invalid_argument("table row has the wrong length");
        for (int k = 0; k <= n; ++k)
            t.set(k, n, poly_from_json(row[static_cast<std::size_t>(k)]));
    }
    return t;
}

Json square_cert_json(const SquareCert& c)
{
    return {{"k", c.k},         {"n", c.n},         {"sigma", rat_json(c.sigma)},
            {"alpha", c.alpha}, {"beta", c.beta},   {"S", poly_json(c.S)}};
}

Json fact2_report_json(const Fact2Report& r)
{
    Json certs = Json::array();
    for (const auto& c : r.certificates)
        certs.push_back(square_cert_json(c));
    Json sturm = Json::array();
    for (const auto& s : r.sturm)
        sturm.push_back({{"k", s.k}, {"n", s.n}, {"rootCount", s.rootCount},
                         {"nonnegative", s.nonnegative}});
    Json failures = Json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"table", std::string(1, f.table)}, {"k", f.k}, {"n", f.n},
                            {"reason", f.reason}});
    return {{"maxN", r.maxN},
            {"sturmMaxN", r.sturmMaxN},
            {"convention", r.convention},
            {"certificates", certs},
            {"certificateCount", r.certificates.size()},
            {"exponentPatternHolds", r.exponentPatternHolds},
            {"convolutionEqual", r.convolutionEqual},
            {"sturm", sturm},
            {"failures", failures},
            {"ok", r.ok()}};
}

Json sym_square_json(const SymSquareCert& c)
{
    Json valid = c.validFromN ? Json(*c.validFromN) : Json(nullptr);
    return {{"A", ratfunc2_json(c.A)},
            {"B2", ratfunc2_json(c.B2)},
            {"Q", ratfunc2_json(c.Q)},
            {"validFromN", valid},
            {"degN", c.degN},
            {"degC", c.degC},
            {"positivityFrom", c.positivityFrom},
            {"positivityTo", c.positivityTo},
            {"positivityFailures", c.positivityFailures},
            {"realOnRange", c.real_on_range()}};
}

Json fact1_json(const Fact1Result& r, bool flowConsistent)
{
    Json orders = Json::array();
    for (std::size_t i = 0; i < r.lhs.size(); ++i)
        orders.push_back({{"order", i + 1},
                          {"lhs", r.lhs[i].str()},
                          {"rhs", r.rhs[i].str()},
                          {"residual", r.residuals[i].str()},
                          {"matches", r.residuals[i].is_zero()}});
    Json first = r.firstFailure ? Json(*r.firstFailure) : Json(nullptr);
    return {{"K", r.K},
            {"flowSign", r.flowSign},
            {"epsilon", r.epsilon},
            {"identityHolds", r.ok},
            {"firstFailure", first},
            {"flowConsistent", flowConsistent},
            {"orders", orders},
            {"ok", r.ok && flowConsistent}};
}

} // namespace branges
