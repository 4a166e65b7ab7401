#include "shimura/serialize.hpp"

#include "shimura/errors.hpp"

#include <cctype>

namespace shimura {

Json rational_to_json(const Rational& r)
{
    return Json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Rational rational_from_json(const Json& j)
{
    Rational r(Integer(j.at("num").get<std::string>()), Integer(j.at("den").get<std::string>()));
    if (r.get_den() == 0) throw ParseError("zero denominator in JSON rational");
    r.canonicalize();
    return r;
}

Json scalar_to_json(const Scalar& s)
{
    if (s.is_constant()) return rational_to_json(s.constant_value());
    Json num = Json::array();
    Json den = Json::array();
    for (const auto& c : s.num().coeffs()) num.push_back(to_string(c));
    for (const auto& c : s.den().coeffs()) den.push_back(to_string(c));
    return Json{{"num_theta", num}, {"den_theta", den}};
}

Scalar scalar_from_json(const Json& j)
{
    if (j.contains("num_theta")) {
        std::vector<Rational> num, den;
        for (const auto& c : j.at("num_theta")) num.push_back(parse_rational(c.get<std::string>()));
        for (const auto& c : j.at("den_theta")) den.push_back(parse_rational(c.get<std::string>()));
        return Scalar(UPoly(std::move(num)), UPoly(std::move(den)));
    }
    return Scalar(rational_from_json(j));
}

namespace {

template <class C, class ToJson>
Json poly_json(const SparsePoly<C>& f, ToJson&& to_json)
{
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back(Json{{"exponents", e}, {"coefficient", to_json(c)}});
    return Json{{"variables", f.vars()}, {"terms", terms}};
}

template <class C, class FromJson>
SparsePoly<C> poly_from(const Json& j, FromJson&& from_json)
{
    SparsePoly<C> f(j.at("variables").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms")) f.add_term(t.at("exponents").get<Exponents>(), from_json(t.at("coefficient")));
    return f;
}

} // namespace

Json poly_to_json(const QPoly& f)
{
    return poly_json(f, rational_to_json);
}

Json poly_to_json(const ThetaPoly& f)
{
    return poly_json(f, scalar_to_json);
}

QPoly qpoly_from_json(const Json& j)
{
    return poly_from<Rational>(j, rational_from_json);
}

ThetaPoly theta_poly_from_json(const Json& j)
{
    return poly_from<Scalar>(j, scalar_from_json);
}

Json coeffs_to_json(const CoeffMap& f, Basis basis)
{
    Json terms = Json::array();
    for (const auto& [lambda, c] : f) terms.push_back(Json{{"partition", lambda.empty() ? "" : lambda.to_string()}, {"coefficient", scalar_to_json(c)}});
    return Json{{"basis", basis_tag(basis)}, {"terms", terms}};
}

CoeffMap coeffs_from_json(const Json& j, Basis* basis)
{
    if (basis) *basis = j.at("basis").get<std::string>() == "m" ? Basis::Monomial : Basis::PowerSum;
    CoeffMap out;
    for (const auto& t : j.at("terms")) out.emplace(parse_partition(t.at("partition").get<std::string>()), scalar_from_json(t.at("coefficient")));
    return out;
}

// ---------------------------------------------------------------- text parser

QPoly parse_qpoly(std::string_view text, const std::vector<std::string>& vars)
{
    // Terms are separated by " + " / " - "; variable names such as "x+1"
    // carry signs without surrounding spaces.
    QPoly out(vars);
    auto fail = [&](const std::string& why) { throw ParseError("cannot parse polynomial '" + std::string(text) + "': " + why); };
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    if (s.empty()) fail("empty");
    if (s == "0") return out;

    std::vector<std::pair<bool, std::string>> terms;
    bool neg = false;
    std::size_t pos = 0;
    if (s[0] == '-') {
        neg = true;
        pos = 1;
    }
    while (true) {
        std::size_t plus = s.find(" + ", pos);
        std::size_t minus = s.find(" - ", pos);
        std::size_t next = std::min(plus, minus);
        terms.emplace_back(neg, s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        if (next == std::string::npos) break;
        neg = next == minus;
        pos = next + 3;
    }

    for (const auto& [negative, term] : terms) {
        if (term.empty()) fail("empty term");
        Rational coeff = 1;
        Exponents e(vars.size(), 0);
        std::size_t k = 0;
        while (true) {
            auto star = term.find('*', k);
            std::string factor = term.substr(k, star == std::string::npos ? std::string::npos : star - k);
            if (factor.empty()) fail("empty factor");
            if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
                coeff *= parse_rational(factor);
            } else {
                auto caret = factor.find('^');
                std::string name = factor.substr(0, caret);
                int power = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
                e[QPoly::index_of(vars, name)] += power;
            }
            if (star == std::string::npos) break;
            k = star + 1;
        }
        out.add_term(e, negative ? Rational(-coeff) : coeff);
    }
    return out;
}

} // namespace shimura
