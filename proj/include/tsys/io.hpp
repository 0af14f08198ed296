#pragma once

// Text formats: .sys system tables, .hyp hypergroup tables (with brace-set
// cells), and matrix files.  Parse errors carry line and column.

#include <fstream>
#include <sstream>

#include "finite.hpp"
#include "hypergroup.hpp"
#include "instances.hpp"
#include "matrix.hpp"
#include "phase.hpp"

namespace tsys {

struct parse_error : std::runtime_error {
    int line, column;
    parse_error(const std::string& what, int l, int c)
        : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) +
                             ": " + what),
          line(l), column(c) {}
};

namespace io_detail {

struct Lines {
    std::vector<std::string> text;
    size_t pos = 0;

    static Lines from_stream(std::istream& in) {
        Lines ls;
        std::string l;
        while (std::getline(in, l)) ls.text.push_back(l);
        return ls;
    }
    bool eof() const { return pos >= text.size(); }
    int lineno() const { return (int)pos + 1; }
    const std::string& line() const { return text[pos]; }
    void next() { ++pos; }
    bool blank_or_comment() const {
        const std::string& l = line();
        size_t b = l.find_first_not_of(" \t");
        return b == std::string::npos || l[b] == '#';
    }
    void skip_blank() {
        while (!eof() && blank_or_comment()) next();
    }
};

// Split into cells at depth-0 whitespace; (), [], {} and the text inside
// them stay glued together.  If depth-0 commas appear, they separate instead.
inline std::vector<std::pair<std::string, int>> split_cells(const std::string& l, int lineno) {
    int depth = 0;
    bool has_comma = false;
    for (char ch : l) {
        if (ch == '(' || ch == '[' || ch == '{') ++depth;
        else if (ch == ')' || ch == ']' || ch == '}') --depth;
        else if (ch == ',' && depth == 0) has_comma = true;
        if (depth < 0) throw parse_error("unbalanced bracket", lineno, 1);
    }
    std::vector<std::pair<std::string, int>> cells;
    std::string cur;
    int start = 0;
    depth = 0;
    auto flush = [&](int end) {
        size_t b = cur.find_first_not_of(" \t");
        if (b != std::string::npos) {
            size_t e = cur.find_last_not_of(" \t");
            cells.emplace_back(cur.substr(b, e - b + 1), start + (int)b + 1);
        }
        cur.clear();
        start = end;
    };
    for (int i = 0; i < (int)l.size(); ++i) {
        char ch = l[i];
        if (ch == '(' || ch == '[' || ch == '{') ++depth;
        else if (ch == ')' || ch == ']' || ch == '}') --depth;
        bool sep = depth == 0 && (has_comma ? ch == ',' : (ch == ' ' || ch == '\t'));
        if (sep) flush(i + 1);
        else cur += ch;
    }
    flush((int)l.size());
    if (depth != 0) throw parse_error("unbalanced bracket", lineno, (int)l.size());
    return cells;
}

inline int find_name(const std::vector<std::string>& names, const std::string& s, int line,
                     int col) {
    for (int i = 0; i < (int)names.size(); ++i)
        if (names[i] == s) return i;
    throw parse_error("'" + s + "' is not in the carrier", line, col);
}

} // namespace io_detail

// .sys format: directives "name", "pseudo"; sections "carrier", "tangibles",
// "zero", "one", "neg" (images in carrier order) on one line; "add" / "mul"
// followed by one table row per carrier element.
inline FiniteSystem& load_sys(std::istream& in, const std::string& fallback_name) {
    using namespace io_detail;
    Lines ls = Lines::from_stream(in);
    auto& s = make_system<FiniteSystem>();
    s.name = fallback_name;
    bool saw_carrier = false, saw_neg = false, saw_add = false, saw_tang = false;

    auto read_table = [&](std::vector<std::vector<int>>& t, int lineno) {
        int n = (int)s.names.size();
        t.assign(n, std::vector<int>(n));
        for (int r = 0; r < n; ++r) {
            ls.skip_blank();
            if (ls.eof()) throw parse_error("table row missing", lineno, 1);
            auto cells = split_cells(ls.line(), ls.lineno());
            if ((int)cells.size() != n)
                throw parse_error("expected " + std::to_string(n) + " cells, got " +
                                      std::to_string(cells.size()),
                                  ls.lineno(), cells.empty() ? 1 : cells.back().second);
            for (int c = 0; c < n; ++c)
                t[r][c] = find_name(s.names, cells[c].first, ls.lineno(), cells[c].second);
            ls.next();
        }
    };

    while (true) {
        ls.skip_blank();
        if (ls.eof()) break;
        int lineno = ls.lineno();
        auto cells = split_cells(ls.line(), lineno);
        std::string kw = cells[0].first;
        ls.next();
        if (kw == "name") {
            if (cells.size() != 2) throw parse_error("name needs one value", lineno, 1);
            s.name = cells[1].first;
        } else if (kw == "pseudo") {
            s.pseudo = true;
        } else if (kw == "carrier") {
            for (size_t i = 1; i < cells.size(); ++i) s.names.push_back(cells[i].first);
            if (s.names.empty()) throw parse_error("empty carrier", lineno, 1);
            saw_carrier = true;
        } else if (kw == "tangibles") {
            if (!saw_carrier) throw parse_error("tangibles before carrier", lineno, 1);
            s.tang.assign(s.names.size(), 0);
            for (size_t i = 1; i < cells.size(); ++i)
                s.tang[find_name(s.names, cells[i].first, lineno, cells[i].second)] = 1;
            saw_tang = true;
        } else if (kw == "zero" || kw == "one") {
            if (!saw_carrier || cells.size() != 2)
                throw parse_error(kw + " needs one carrier element", lineno, 1);
            int i = find_name(s.names, cells[1].first, lineno, cells[1].second);
            (kw == "zero" ? s.zero_idx : s.one_idx) = i;
        } else if (kw == "neg") {
            if (!saw_carrier || cells.size() != s.names.size() + 1)
                throw parse_error("neg needs one image per carrier element", lineno, 1);
            s.negt.resize(s.names.size());
            for (size_t i = 1; i < cells.size(); ++i)
                s.negt[i - 1] = find_name(s.names, cells[i].first, lineno, cells[i].second);
            saw_neg = true;
        } else if (kw == "add") {
            if (!saw_carrier) throw parse_error("add before carrier", lineno, 1);
            read_table(s.addt, lineno);
            saw_add = true;
        } else if (kw == "mul") {
            if (!saw_carrier) throw parse_error("mul before carrier", lineno, 1);
            read_table(s.mult, lineno);
        } else {
            throw parse_error("unknown directive '" + kw + "'", lineno, cells[0].second);
        }
    }
    if (!saw_carrier || !saw_neg || !saw_add || !saw_tang)
        throw parse_error("missing section (carrier, tangibles, neg and add are required)",
                          (int)ls.text.size(), 1);
    s.finalize();
    return s;
}

// .hyp format: same shape, but add-table cells may be brace sets {a b c};
// directive "noncanonical" waives the unique-hypernegative check on load.
inline Hypergroup load_hyp(std::istream& in, const std::string& fallback_name) {
    using namespace io_detail;
    Lines ls = Lines::from_stream(in);
    Hypergroup h;
    h.name = fallback_name;
    bool saw_carrier = false, saw_neg = false, saw_add = false;

    auto cellset = [&](const std::string& cell, int lineno, int col) {
        uint64_t m = 0;
        if (!cell.empty() && cell.front() == '{') {
            if (cell.back() != '}') throw parse_error("bad set cell", lineno, col);
            auto inner = split_cells(cell.substr(1, cell.size() - 2), lineno);
            if (inner.empty()) throw parse_error("empty set cell", lineno, col);
            for (auto& [nm, c2] : inner)
                m |= uint64_t(1) << find_name(h.names, nm, lineno, col + c2);
        } else {
            m = uint64_t(1) << find_name(h.names, cell, lineno, col);
        }
        return m;
    };

    while (true) {
        ls.skip_blank();
        if (ls.eof()) break;
        int lineno = ls.lineno();
        auto cells = split_cells(ls.line(), lineno);
        std::string kw = cells[0].first;
        ls.next();
        if (kw == "name") {
            h.name = cells.at(1).first;
        } else if (kw == "noncanonical") {
            h.noncanonical = true;
        } else if (kw == "carrier") {
            for (size_t i = 1; i < cells.size(); ++i) h.names.push_back(cells[i].first);
            if (h.names.empty()) throw parse_error("empty carrier", lineno, 1);
            saw_carrier = true;
        } else if (kw == "zero" || kw == "one") {
            int i = find_name(h.names, cells.at(1).first, lineno, cells[1].second);
            (kw == "zero" ? h.zero : h.one_idx) = i;
        } else if (kw == "neg") {
            if (!saw_carrier || cells.size() != h.names.size() + 1)
                throw parse_error("neg needs one image per carrier element", lineno, 1);
            h.negt.resize(h.names.size());
            for (size_t i = 1; i < cells.size(); ++i)
                h.negt[i - 1] = find_name(h.names, cells[i].first, lineno, cells[i].second);
            saw_neg = true;
        } else if (kw == "add" || kw == "mul") {
            if (!saw_carrier) throw parse_error(kw + " before carrier", lineno, 1);
            int n = (int)h.names.size();
            if (kw == "add") h.addm.assign(n, std::vector<uint64_t>(n, 0));
            else h.mult.assign(n, std::vector<int>(n, 0));
            for (int r = 0; r < n; ++r) {
                ls.skip_blank();
                if (ls.eof()) throw parse_error("table row missing", lineno, 1);
                auto row = split_cells(ls.line(), ls.lineno());
                if ((int)row.size() != n)
                    throw parse_error("expected " + std::to_string(n) + " cells", ls.lineno(), 1);
                for (int c = 0; c < n; ++c) {
                    if (kw == "add")
                        h.addm[r][c] = cellset(row[c].first, ls.lineno(), row[c].second);
                    else
                        h.mult[r][c] =
                            find_name(h.names, row[c].first, ls.lineno(), row[c].second);
                }
                ls.next();
            }
            if (kw == "add") saw_add = true;
        } else {
            throw parse_error("unknown directive '" + kw + "'", lineno, cells[0].second);
        }
    }
    if (!saw_carrier || !saw_neg || !saw_add)
        throw parse_error("missing section (carrier, neg and add are required)",
                          (int)ls.text.size(), 1);
    return h;
}

// Matrix file: header "rows cols system-name", then one row of element
// literals per line (depth-0 whitespace separated; commas may be used when a
// literal itself contains top-level spaces).
inline Matrix load_matrix(std::istream& in, const System* (*lookup)(const std::string&)) {
    using namespace io_detail;
    Lines ls = Lines::from_stream(in);
    ls.skip_blank();
    if (ls.eof()) throw parse_error("empty matrix file", 1, 1);
    auto head = split_cells(ls.line(), ls.lineno());
    if (head.size() != 3) throw parse_error("header must be: rows cols system", ls.lineno(), 1);
    int r, c;
    try {
        r = std::stoi(head[0].first);
        c = std::stoi(head[1].first);
    } catch (const std::exception&) {
        throw parse_error("bad matrix dimensions", ls.lineno(), head[0].second);
    }
    const System* S = lookup(head[2].first);
    if (!S) throw parse_error("unknown system '" + head[2].first + "'", ls.lineno(), head[2].second);
    ls.next();
    Matrix m(*S, r, c);
    for (int i = 0; i < r; ++i) {
        ls.skip_blank();
        if (ls.eof()) throw parse_error("matrix row missing", (int)ls.text.size(), 1);
        auto cells = split_cells(ls.line(), ls.lineno());
        if ((int)cells.size() != c)
            throw parse_error("expected " + std::to_string(c) + " entries, got " +
                                  std::to_string(cells.size()),
                              ls.lineno(), 1);
        for (int j = 0; j < c; ++j) {
            try {
                m.at(i, j) = S->parse(cells[j].first);
            } catch (const std::exception& ex) {
                throw parse_error(ex.what(), ls.lineno(), cells[j].second);
            }
        }
        ls.next();
    }
    return m;
}

// Flat key=value report lines, stable order.
struct KV {
    std::vector<std::pair<std::string, std::string>> rows;
    void put(const std::string& k, const std::string& v) { rows.emplace_back(k, v); }
    void put(const std::string& k, const char* v) { rows.emplace_back(k, v); }
    void put(const std::string& k, bool v) { rows.emplace_back(k, v ? "true" : "false"); }
    void put(const std::string& k, int v) { rows.emplace_back(k, std::to_string(v)); }
    std::string render(bool machine) const {
        std::string out;
        for (const auto& [k, v] : rows)
            out += machine ? k + "=" + v + "\n" : k + ": " + v + "\n";
        return out;
    }
};

} // namespace tsys
