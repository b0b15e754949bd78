#ifndef UMLP_DIAG_HPP
#define UMLP_DIAG_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace umlp {

/// Half-open source region, 1-based lines and columns.
struct Span {
    int beginLine = 1;
    int beginCol = 1;
    int endLine = 1;
    int endCol = 1;

    auto operator<=>(const Span&) const = default;
};

enum class Severity { Error, Warning, Note };

const char* severity_name(Severity s);

/// One reported problem. `code` is stable (CC-*, SM-*, SyntaxError, ...);
/// `subject` is a slash-separated path into the offending document.
struct Diagnostic {
    std::string code;
    Severity severity = Severity::Error;
    std::string message;
    std::string subject;
    std::optional<Span> span;

    auto operator<=>(const Diagnostic&) const = default;
};

bool has_errors(const std::vector<Diagnostic>& diags);

/// Orders by code, then subject, then span; used everywhere a diagnostic
/// list must be deterministic.
void sort_diagnostics(std::vector<Diagnostic>& diags);

/// Value-or-diagnostics result used by the fallible pipeline stages.
template <class T>
struct Result {
    std::optional<T> value;
    std::vector<Diagnostic> diags;

    bool ok() const { return value.has_value() && !has_errors(diags); }
    const T& operator*() const { return *value; }
    const T* operator->() const { return &*value; }

    static Result success(T v, std::vector<Diagnostic> warnings = {}) {
        return Result{std::move(v), std::move(warnings)};
    }
    static Result failure(std::vector<Diagnostic> d) {
        return Result{std::nullopt, std::move(d)};
    }
    static Result failure(Diagnostic d) {
        return Result{std::nullopt, {std::move(d)}};
    }
};

}  // namespace umlp

#endif
