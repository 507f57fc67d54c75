#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tripts/graphs.hpp"

namespace tripts {

/// Canonical rational formatting: always `<num>/<den>` in lowest terms, so
/// serialize(parse(file)) is byte-identical for canonical files.
inline std::string format_rational(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(const std::string& tok) {
    auto slash = tok.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == tok.size()) {
        throw std::invalid_argument("bad rational token: " + tok);
    }
    mpz_class num, den;
    if (num.set_str(tok.substr(0, slash), 10) != 0 ||
        den.set_str(tok.substr(slash + 1), 10) != 0) {
        throw std::invalid_argument("bad rational token: " + tok);
    }
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator: " + tok);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Point-set file: first line `tripts v1 <n>`, then one `x y` rational pair
/// per line; `#` starts a comment.
inline void write_points(std::ostream& os, const PointSet& ps) {
    os << "tripts v1 " << ps.size() << "\n";
    for (const Point& p : ps) {
        os << format_rational(p.x.rational_part()) << " "
           << format_rational(p.y.rational_part()) << "\n";
    }
}

inline void write_points_file(const std::string& path, const PointSet& ps) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    write_points(f, ps);
}

inline PointSet read_points(std::istream& is) {
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(is, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw std::invalid_argument("points file: empty");
    std::istringstream head(line);
    std::string magic, version;
    std::size_t n = 0;
    head >> magic >> version >> n;
    if (magic != "tripts" || version != "v1" || head.fail()) {
        throw std::invalid_argument("points file: bad header: " + line);
    }
    std::vector<std::pair<Rational, Rational>> coords;
    for (std::size_t i = 0; i < n; ++i) {
        if (!next_line()) throw std::invalid_argument("points file: truncated");
        std::istringstream ls(line);
        std::string xt, yt;
        ls >> xt >> yt;
        if (ls.fail()) throw std::invalid_argument("points file: bad point line: " + line);
        coords.emplace_back(parse_rational(xt), parse_rational(yt));
    }
    return PointSet(std::move(coords));
}

inline PointSet read_points_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    return read_points(f);
}

inline std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::down: return "down";
        case Flavor::up: return "up";
        case Flavor::union_of: return "union";
        case Flavor::intersection: return "intersection";
    }
    return "?";
}

inline Flavor parse_flavor(const std::string& s) {
    if (s == "down") return Flavor::down;
    if (s == "up") return Flavor::up;
    if (s == "union") return Flavor::union_of;
    if (s == "intersection") return Flavor::intersection;
    throw std::invalid_argument("unknown flavor: " + s);
}

/// Graph export: flavor header then `u v` pairs in lexicographic order.
inline void write_graph(std::ostream& os, const TriGraph& g) {
    os << flavor_name(g.flavor) << "\n";
    for (auto& [u, v] : g.edges) os << u << " " << v << "\n";
}

/// Flat key=value report; every enabled check appears exactly once.
class RunReport {
public:
    void add(const std::string& key, const std::string& value) {
        for (auto& [k, v] : entries_) {
            if (k == key) throw std::logic_error("duplicate report key: " + key);
        }
        entries_.emplace_back(key, value);
    }
    void add(const std::string& key, long value) { add(key, std::to_string(value)); }
    void add(const std::string& key, bool value) {
        add(key, std::string(value ? "pass" : "FAIL"));
    }

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

    bool all_checks_pass() const {
        for (auto& [k, v] : entries_) {
            if (v == "FAIL") return false;
        }
        return true;
    }

    void print(std::ostream& os) const {
        for (auto& [k, v] : entries_) os << k << "=" << v << "\n";
    }

    static RunReport parse(std::istream& is) {
        RunReport r;
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            auto eq = line.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("bad report line: " + line);
            r.entries_.emplace_back(line.substr(0, eq), line.substr(eq + 1));
        }
        return r;
    }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

} // namespace tripts
