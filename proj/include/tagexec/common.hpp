#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace tagexec {

enum class ColumnType : uint8_t { Int64, Float64, Bool, String };

const char* column_type_name(ColumnType t);
std::optional<ColumnType> column_type_from_name(const std::string& s);

// A cell value. monostate stands for SQL NULL.
using Value = std::variant<std::monostate, int64_t, double, bool, std::string>;

bool value_is_null(const Value& v);
std::string value_to_string(const Value& v);

// SQL three-valued logic.
enum class Ternary : uint8_t { True = 0, False = 1, Unknown = 2 };

inline Ternary t_not(Ternary a) {
  if (a == Ternary::Unknown) return Ternary::Unknown;
  return a == Ternary::True ? Ternary::False : Ternary::True;
}
inline Ternary t_and(Ternary a, Ternary b) {
  if (a == Ternary::False || b == Ternary::False) return Ternary::False;
  if (a == Ternary::Unknown || b == Ternary::Unknown) return Ternary::Unknown;
  return Ternary::True;
}
inline Ternary t_or(Ternary a, Ternary b) {
  if (a == Ternary::True || b == Ternary::True) return Ternary::True;
  if (a == Ternary::Unknown || b == Ternary::Unknown) return Ternary::Unknown;
  return Ternary::False;
}

enum class LogicMode : uint8_t { TwoValued, ThreeValued };

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : Error {
  ParseError(const std::string& msg, size_t offset, int line, int col);
  size_t offset;
  int line, col;
};
struct BindError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};
struct CsvError : Error {
  using Error::Error;
};
// Raised for conditions that signal a bug in tag-map construction or an
// unsatisfiable tag, e.g. propagation deriving a conflicting assignment.
struct InternalError : Error {
  using Error::Error;
};

// Engine knobs. Loadable from a key=value config file; CLI flags override.
struct EngineConfig {
  size_t page_size = 64 * 1024;
  size_t cache_pages = 4096;
  // Above this fraction of selected rows a column is read sequentially and
  // filtered in memory instead of via page-targeted reads.
  double seq_read_threshold = 0.05;

  double alpha = 1.0;           // filter-vs-join calibration
  double f_comparison = 1.0;    // per-atom cost factor: comparisons
  double f_ilike = 10.0;        // per-atom cost factor: ILIKE matching
  double f_hash_lookup = 1.0;
  double f_hash_build = 1.0;
  double f_index_build = 1.0;
};

EngineConfig load_config_file(const std::string& path);

}  // namespace tagexec
