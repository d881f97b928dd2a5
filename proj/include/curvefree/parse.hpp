#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "curvefree/poly.hpp"

namespace curvefree {

/// Raised for malformed input text. `offending` lists monomials that broke
/// homogeneity, when that is the cause.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, std::vector<std::string> offending = {})
        : std::runtime_error(what), offending_(std::move(offending)) {}
    const std::vector<std::string>& offending() const { return offending_; }

private:
    std::vector<std::string> offending_;
};

/// Constant expression over Q(w): integers, p/q, the symbol w, + - * / ^ and
/// parentheses. w^2 is reduced on input.
Eisenstein parse_constant(std::string_view text);

/// Homogeneous polynomial expression in x, y, z. Non-homogeneous input is
/// rejected with the monomials whose degree differs from the leading degree.
HomogeneousPoly parse_polynomial(std::string_view text);

/// "x:y:z" with each coordinate a constant expression.
ProjectivePoint<Eisenstein> parse_point(std::string_view text);

/// One labelled component of a curve file.
struct CurveComponent {
    std::string label;
    HomogeneousPoly poly;
};

/// A curve file: one polynomial per non-blank line, `#` starts a comment.
/// A line "label: expr" names the component; otherwise a "# label" comment
/// line directly above it does, falling back to "c<index>". The curve is the
/// product of all components.
struct CurveFile {
    std::vector<CurveComponent> components;

    HomogeneousPoly product() const;
    std::string str() const;
};

CurveFile parse_curve_file(std::string_view text);
CurveFile read_curve_file(const std::string& path);

}  // namespace curvefree
