#include <branges/fact1.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace branges {

int generator_id(int index, Family family)
{
    if (index < 1)
        throw std::invalid_argument("generator index must be >= 1");
    return 4 * (index - 1) + static_cast<int>(family);
}

Generator generator_of(int id)
{
    return {id / 4 + 1, static_cast<Family>(id % 4)};
}

SymPoly::SymPoly(const Rat& constant)
{
    if (!constant.is_zero())
        terms_.emplace(SymMonomial{}, constant);
}

SymPoly SymPoly::gen(int index, Family family)
{
    SymPoly p;
    p.terms_.emplace(SymMonomial{{generator_id(index, family), 1}}, Rat(1));
    return p;
}

void SymPoly::add_term(const SymMonomial& m, const Rat& a)
{
    if (a.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, a);
    if (inserted)
        return;
    it->second += a;
    if (it->second.is_zero())
        terms_.erase(it);
}

SymPoly& SymPoly::operator+=(const SymPoly& o)
{
    for (const auto& [m, a] : o.terms_)
        add_term(m, a);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o)
{
    for (const auto& [m, a] : o.terms_)
        add_term(m, -a);
    return *this;
}

namespace {

SymMonomial multiply(const SymMonomial& x, const SymMonomial& y)
{
    SymMonomial r;
    r.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first))
            r.push_back(x[i++]);
        else if (i == x.size() || y[j].first < x[i].first)
            r.push_back(y[j++]);
        else {
            r.emplace_back(x[i].first, x[i].second + y[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

SymMonomial sorted(SymMonomial m)
{
    std::sort(m.begin(), m.end());
    return m;
}

} // namespace

SymPoly operator*(const SymPoly& a, const SymPoly& b)
{
    SymPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(multiply(ma, mb), ca * cb);
    return r;
}

SymPoly operator*(const SymPoly& a, const Rat& s)
{
    if (s.is_zero())
        return SymPoly();
    SymPoly r = a;
    for (auto& [m, c] : r.terms_)
        c *= s;
    return r;
}

SymPoly SymPoly::conj() const
{
    static constexpr int swap[4] = {1, 0, 3, 2};
    SymPoly r;
    for (const auto& [m, a] : terms_) {
        SymMonomial cm;
        for (const auto& [id, e] : m) {
            Generator g = generator_of(id);
            cm.emplace_back(generator_id(g.index, static_cast<Family>(swap[static_cast<int>(g.family)])), e);
        }
        r.add_term(sorted(std::move(cm)), a);
    }
    return r;
}

SymPoly SymPoly::D() const
{
    SymPoly r;
    for (const auto& [m, a] : terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            Generator g = generator_of(m[i].first);
            if (g.family == Family::CD || g.family == Family::CBD)
                throw std::domain_error("D applied to a dotted generator");
            SymMonomial rest = m;
            int e = rest[i].second;
            if (--rest[i].second == 0)
                rest.erase(rest.begin() + static_cast<long>(i));
            Family dotted = g.family == Family::C ? Family::CD : Family::CBD;
            SymMonomial d{{generator_id(g.index, dotted), 1}};
            r.add_term(multiply(rest, d), a * Rat(e));
        }
    }
    return r;
}

std::string SymPoly::str() const
{
    static const char* names[4] = {"c", "cb", "cd", "cbd"};
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, a] : terms_) {
        Rat mag = a.abs();
        if (first)
            os << (a.sign() < 0 ? "-" : "");
        else
            os << (a.sign() < 0 ? " - " : " + ");
        first = false;
        bool wrote = false;
        if (m.empty() || !mag.is_one()) {
            os << mag.str();
            wrote = true;
        }
        for (const auto& [id, e] : m) {
            Generator g = generator_of(id);
            os << (wrote ? "*" : "") << names[static_cast<int>(g.family)] << g.index;
            if (e > 1)
                os << "^" << e;
            wrote = true;
        }
    }
    return os.str();
}

std::optional<SymPoly> Ring<SymPoly>::inverse(const SymPoly& p)
{
    if (p.terms().size() != 1 || !p.terms().begin()->first.empty())
        return std::nullopt;
    return SymPoly(p.terms().begin()->second.inverse());
}

} // namespace branges
