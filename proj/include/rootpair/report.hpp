#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rootpair {

/// One typed value in a report. Floating-point values render with 12
/// significant digits in every output format, so a number round-trips
/// identically through CSV and JSON.
class Cell {
public:
    /// Every integral quantity in this artifact (p <= 10^7, counts <= p)
    /// fits comfortably in int64.
    static Cell integer(int64_t v);
    static Cell real(double v);
    static Cell text(std::string v);
    static Cell boolean(bool v);
    static Cell empty();

    /// Raw CSV token, quoted only when the content requires it.
    std::string csv() const;
    /// A JSON literal (number, string, bool, or null).
    std::string json() const;
    /// Plain text for aligned tables.
    std::string table() const;

private:
    enum class Kind { Int, Float, Str, Bool, Empty };
    Kind kind_ = Kind::Empty;
    int64_t int_ = 0;
    double float_ = 0.0;
    std::string str_;
    bool bool_ = false;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// An ordered set of named tables. Every command emits a document whose
/// first section is named "rows"; `verify` appends a "claims" section.
struct Section {
    std::string name;
    Table table;
};

struct Document {
    std::vector<Section> sections;
};

/// Sections concatenated, each with its own header row; sections after the
/// first are preceded by one blank line.
std::string to_csv(const Document& doc);

/// One top-level object: {"rows": [...], ...}, one key per section, each row
/// an object keyed by column name.
std::string to_json(const Document& doc);

/// Column-aligned plain text.
std::string to_table(const Document& doc);

} // namespace rootpair
