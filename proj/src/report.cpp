#include "rootpair/report.hpp"

#include <algorithm>
#include <cstdio>

namespace rootpair {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
}

bool csv_needs_quoting(const std::string& s) {
    return s.find_first_of(",\"\n") != std::string::npos;
}

std::string csv_quote(const std::string& s) {
    if (!csv_needs_quoting(s)) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    out += '"';
    return out;
}

} // namespace

Cell Cell::integer(int64_t v) {
    Cell c;
    c.kind_ = Kind::Int;
    c.int_ = v;
    return c;
}

Cell Cell::real(double v) {
    Cell c;
    c.kind_ = Kind::Float;
    c.float_ = v;
    return c;
}

Cell Cell::text(std::string v) {
    Cell c;
    c.kind_ = Kind::Str;
    c.str_ = std::move(v);
    return c;
}

Cell Cell::boolean(bool v) {
    Cell c;
    c.kind_ = Kind::Bool;
    c.bool_ = v;
    return c;
}

Cell Cell::empty() {
    return Cell{};
}

std::string Cell::csv() const {
    switch (kind_) {
    case Kind::Int: return std::to_string(int_);
    case Kind::Float: return format_double(float_);
    case Kind::Str: return csv_quote(str_);
    case Kind::Bool: return bool_ ? "true" : "false";
    case Kind::Empty: return "";
    }
    return "";
}

std::string Cell::json() const {
    switch (kind_) {
    case Kind::Int: return std::to_string(int_);
    case Kind::Float: return format_double(float_);
    case Kind::Str: return json_quote(str_);
    case Kind::Bool: return bool_ ? "true" : "false";
    case Kind::Empty: return "null";
    }
    return "null";
}

std::string Cell::table() const {
    if (kind_ == Kind::Str) {
        return str_;
    }
    return csv();
}

std::string to_csv(const Document& doc) {
    std::string out;
    bool first_section = true;
    for (const Section& section : doc.sections) {
        if (!first_section) {
            out += '\n';
        }
        first_section = false;
        for (size_t i = 0; i < section.table.columns.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += csv_quote(section.table.columns[i]);
        }
        out += '\n';
        for (const auto& row : section.table.rows) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i > 0) {
                    out += ',';
                }
                out += row[i].csv();
            }
            out += '\n';
        }
    }
    return out;
}

std::string to_json(const Document& doc) {
    std::string out = "{";
    for (size_t s = 0; s < doc.sections.size(); ++s) {
        const Section& section = doc.sections[s];
        if (s > 0) {
            out += ",";
        }
        out += "\n  " + json_quote(section.name) + ": [";
        for (size_t r = 0; r < section.table.rows.size(); ++r) {
            const auto& row = section.table.rows[r];
            out += r > 0 ? ",\n    {" : "\n    {";
            for (size_t i = 0; i < row.size(); ++i) {
                if (i > 0) {
                    out += ", ";
                }
                out += json_quote(section.table.columns[i]) + ": " + row[i].json();
            }
            out += "}";
        }
        out += section.table.rows.empty() ? "]" : "\n  ]";
    }
    out += "\n}\n";
    return out;
}

std::string to_table(const Document& doc) {
    std::string out;
    bool first_section = true;
    for (const Section& section : doc.sections) {
        if (!first_section) {
            out += '\n';
        }
        first_section = false;
        if (doc.sections.size() > 1) {
            out += "[" + section.name + "]\n";
        }
        const size_t ncols = section.table.columns.size();
        std::vector<size_t> width(ncols);
        std::vector<std::vector<std::string>> cells;
        cells.reserve(section.table.rows.size());
        for (size_t i = 0; i < ncols; ++i) {
            width[i] = section.table.columns[i].size();
        }
        for (const auto& row : section.table.rows) {
            std::vector<std::string> line(ncols);
            for (size_t i = 0; i < ncols && i < row.size(); ++i) {
                line[i] = row[i].table();
                width[i] = std::max(width[i], line[i].size());
            }
            cells.push_back(std::move(line));
        }
        auto append_line = [&](const std::vector<std::string>& line) {
            for (size_t i = 0; i < ncols; ++i) {
                if (i > 0) {
                    out += "  ";
                }
                out += line[i];
                if (i + 1 < ncols) {
                    out.append(width[i] - line[i].size(), ' ');
                }
            }
            out += '\n';
        };
        append_line(section.table.columns);
        std::string rule;
        for (size_t i = 0; i < ncols; ++i) {
            if (i > 0) {
                rule += "  ";
            }
            rule.append(width[i], '-');
        }
        out += rule + '\n';
        for (const auto& line : cells) {
            append_line(line);
        }
    }
    return out;
}

} // namespace rootpair
