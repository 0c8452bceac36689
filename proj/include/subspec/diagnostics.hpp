#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace subspec {

enum class Severity { error, warning };

struct SourcePos {
  int line = 1;
  int column = 1;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

/// A positioned message with a stable short code (e.g. "E004") so tests and
/// golden files can assert on it without matching prose.
struct Diagnostic {
  Severity severity = Severity::error;
  SourcePos pos;
  std::string code;
  std::string message;
};

inline std::string to_string(const Diagnostic& d) {
  std::ostringstream os;
  os << d.pos.line << ':' << d.pos.column << ": "
     << (d.severity == Severity::error ? "error" : "warning") << '[' << d.code
     << "]: " << d.message;
  return os.str();
}

inline Diagnostic make_error(SourcePos pos, std::string code, std::string message) {
  return Diagnostic{Severity::error, pos, std::move(code), std::move(message)};
}

inline Diagnostic make_warning(SourcePos pos, std::string code, std::string message) {
  return Diagnostic{Severity::warning, pos, std::move(code), std::move(message)};
}

/// Outcome of a parse: a value, diagnostics, or both (value plus warnings).
/// Parsers are total: they never throw on malformed input.
template <class T>
struct Parsed {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value(); }

  bool has_errors() const {
    for (const auto& d : diagnostics) {
      if (d.severity == Severity::error) return true;
    }
    return false;
  }
};

}  // namespace subspec
