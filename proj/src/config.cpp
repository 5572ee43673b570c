#include "slgal/config.hpp"

#include <json.hpp>

namespace slgal {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::Schema, what); }

const json& field(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) schema(std::string("missing field \"") + key + "\"");
    return *it;
}

double number(const json& v, const std::string& where) {
    if (!v.is_number()) schema(where + " must be a number");
    return v.get<double>();
}

std::vector<double> coeff_list(const json& v, const std::string& where) {
    if (!v.is_array() || v.empty()) schema(where + " must be a non-empty array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

RationalFn rational(const json& v, const std::string& where) {
    if (!v.is_object()) schema(where + " must be an object with \"num\" and \"den\"");
    RealPoly num(coeff_list(field(v, "num"), where + ".num"));
    RealPoly den(coeff_list(field(v, "den"), where + ".den"));
    if (den.is_zero()) schema(where + ".den is the zero polynomial");
    return RationalFn(std::move(num), std::move(den));
}

std::vector<double> params(const json& doc, std::size_t n) {
    const auto v = coeff_list(field(doc, "params"), "params");
    if (v.size() != n) schema("params must have " + std::to_string(n) + " entries");
    return v;
}

}  // namespace

SLProblem parse_problem(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        schema(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) schema("problem document must be a JSON object");
    const json& fam = field(doc, "family");
    if (!fam.is_string()) schema("family must be a string");
    const std::string family = fam.get<std::string>();
    if (family == "hulthen") {
        const auto a = params(doc, 3);
        return make_hulthen(a[0], a[1], a[2]);
    }
    if (family == "allen_cahn") return make_allen_cahn(params(doc, 1)[0]);
    if (family != "custom") schema("unknown family \"" + family + "\"");

    RealPoly f(coeff_list(field(doc, "f"), "f"));
    return SLProblem::custom(std::move(f), rational(field(doc, "g"), "g"), rational(field(doc, "h"), "h"),
                             number(field(doc, "z_minus"), "z_minus"), number(field(doc, "z_plus"), "z_plus"),
                             number(field(doc, "gamma_init"), "gamma_init"));
}

}  // namespace slgal
