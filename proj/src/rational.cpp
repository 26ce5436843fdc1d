#include "logenr/rational.hpp"

#include <limits>
#include <ostream>

#include "logenr/error.hpp"

namespace logenr {

std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::UnknownVertex: return "UnknownVertex";
        case Errc::MalformedDocument: return "MalformedDocument";
        case Errc::NoSuchEdge: return "NoSuchEdge";
        case Errc::NoNode: return "NoNode";
        case Errc::NotMinusOne: return "NotMinusOne";
        case Errc::BoundaryContraction: return "BoundaryContraction";
        case Errc::UnsupportedSingularPoint: return "UnsupportedSingularPoint";
        case Errc::SingularConfiguration: return "SingularConfiguration";
        case Errc::NodalExceptional: return "NodalExceptional";
        case Errc::NotKlt: return "NotKlt";
        case Errc::GoldenMismatch: return "GoldenMismatch";
        case Errc::ParseError: return "ParseError";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(Errc::InvalidArgument, "division by zero");
    q_ /= o.q_;
    return *this;
}

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_part = body.substr(0, slash);
    const std::string_view den_part =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digits(num_part) || !is_digits(den_part))
        throw Error(Errc::ParseError, "not a fraction: '" + std::string(text) + "'");
    BigInt num{std::string(num_part)};
    BigInt den{std::string(den_part)};
    if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    if (negative) num = -num;
    return Rational(num, den);
}

Rational Rational::parse_canonical(std::string_view text) {
    Rational r = parse(text);
    if (r.str() != text)
        throw Error(Errc::ParseError, "fraction not in reduced form: '" + std::string(text) + "'");
    return r;
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw Error(Errc::InvalidArgument, "not an integer: " + str());
    const BigInt n = num();
    if (!n.fits_slong_p()) throw Error(Errc::InvalidArgument, "integer out of range: " + str());
    return n.get_si();
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace logenr
