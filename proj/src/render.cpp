#include "chebfact/render.hpp"

namespace chebfact {

std::optional<OutputFormat> parse_format(const std::string& name) {
    if (name == "plain") return OutputFormat::Plain;
    if (name == "json") return OutputFormat::Json;
    if (name == "latex") return OutputFormat::Latex;
    return std::nullopt;
}

std::optional<ChebKind> parse_kind(const std::string& name) {
    if (name == "U") return ChebKind::U;
    if (name == "V") return ChebKind::V;
    if (name == "W") return ChebKind::W;
    if (name == "X") return ChebKind::X;
    if (name == "Y") return ChebKind::Y;
    if (name == "Xbar") return ChebKind::Xbar;
    if (name == "Ybar") return ChebKind::Ybar;
    return std::nullopt;
}

std::optional<Variant> parse_variant(const std::string& name) {
    if (name == "plus") return Variant::PlusOne;
    if (name == "minus") return Variant::MinusOne;
    if (name == "square") return Variant::SquaredMinusOne;
    return std::nullopt;
}

std::string kind_name(ChebKind kind) {
    switch (kind) {
        case ChebKind::U: return "U";
        case ChebKind::V: return "V";
        case ChebKind::W: return "W";
        case ChebKind::X: return "X";
        case ChebKind::Y: return "Y";
        case ChebKind::Xbar: return "Xbar";
        case ChebKind::Ybar: return "Ybar";
    }
    return "?";
}

std::string variant_name(Variant variant) {
    switch (variant) {
        case Variant::PlusOne: return "plus";
        case Variant::MinusOne: return "minus";
        case Variant::SquaredMinusOne: return "square";
    }
    return "?";
}

namespace {

bool is_negative(const BigInt& v) { return v < 0; }
bool is_negative(const BigRat& v) { return v < 0; }
bool is_one(const BigInt& v) { return v == 1; }
bool is_one(const BigRat& v) { return v == 1; }

std::string magnitude_plain(const BigInt& v) {
    const BigInt a = boost::multiprecision::abs(v);
    return a.str();
}

std::string magnitude_plain(const BigRat& v) {
    const BigRat a = boost::multiprecision::abs(v);
    if (rat_den(a) == 1) return rat_num(a).str();
    return rat_num(a).str() + "/" + rat_den(a).str();
}

std::string magnitude_latex(const BigInt& v) { return magnitude_plain(v); }

std::string magnitude_latex(const BigRat& v) {
    const BigRat a = boost::multiprecision::abs(v);
    if (rat_den(a) == 1) return rat_num(a).str();
    return "\\frac{" + rat_num(a).str() + "}{" + rat_den(a).str() + "}";
}

// Shared descending-degree term walk; only the magnitude spelling and the
// exponent syntax differ between plain and latex.
template <typename Coeff, typename MagnitudeFn>
std::string render_terms(const Polynomial<Coeff>& p, MagnitudeFn magnitude, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Coeff c = p.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (out.empty()) {
            if (is_negative(c)) out += "-";
        } else {
            out += is_negative(c) ? " - " : " + ";
        }
        const Coeff a = is_negative(c) ? Coeff(-c) : c;
        if (!is_one(a) || i == 0) out += magnitude(a);
        if (i == 1) out += "x";
        else if (i > 1) out += latex ? "x^{" + std::to_string(i) + "}" : "x^" + std::to_string(i);
    }
    return out;
}

}  // namespace

std::string to_plain(const IntPoly& p) {
    return render_terms(p, [](const BigInt& v) { return magnitude_plain(v); }, false);
}

std::string to_plain(const RatPoly& p) {
    return render_terms(p, [](const BigRat& v) { return magnitude_plain(v); }, false);
}

std::string to_latex(const IntPoly& p) {
    return render_terms(p, [](const BigInt& v) { return magnitude_latex(v); }, true);
}

std::string to_latex(const RatPoly& p) {
    return render_terms(p, [](const BigRat& v) { return magnitude_latex(v); }, true);
}

std::vector<std::string> coeff_strings(const IntPoly& p) {
    std::vector<std::string> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) out.push_back(c.str());
    return out;
}

std::vector<std::string> coeff_strings(const RatPoly& p) {
    std::vector<std::string> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        if (rat_den(c) == 1) out.push_back(rat_num(c).str());
        else out.push_back(rat_num(c).str() + "/" + rat_den(c).str());
    }
    return out;
}

std::string psi_label(long long d, OutputFormat format) {
    if (format == OutputFormat::Latex) return "\\Psi_{" + std::to_string(d) + "}(x)";
    return "Psi_" + std::to_string(d);
}

std::string target_label(const FactorTarget& target, OutputFormat format) {
    const std::string kind = target.kind == VwKind::V ? "V" : "W";
    const bool latex = format == OutputFormat::Latex;
    std::string name = latex ? kind + "_{" + std::to_string(target.n) + "}(x)"
                             : kind + "_" + std::to_string(target.n) + "(x)";
    switch (target.variant) {
        case Variant::PlusOne: return name + " + 1";
        case Variant::MinusOne: return name + " - 1";
        case Variant::SquaredMinusOne: return name + (latex ? "^{2} - 1" : "^2 - 1");
    }
    return name;
}

}  // namespace chebfact
