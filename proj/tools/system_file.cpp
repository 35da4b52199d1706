#include "system_file.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>

namespace zqdyn::cli {

SystemFileError::SystemFileError(const std::string& msg, int line_)
    : std::runtime_error(line_ > 0 ? msg + " (line " + std::to_string(line_) + ")" : msg),
      line(line_) {}

namespace {

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

long long parse_int(const std::string& tok, int line) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw SystemFileError("expected an integer, got '" + tok + "'", line);
    }
    if (pos != tok.size()) throw SystemFileError("trailing junk in integer '" + tok + "'", line);
    return v;
}

}  // namespace

SystemFile parse_system_file(std::istream& in, const std::string& path) {
    std::optional<std::vector<u64>> moduli;
    std::optional<std::size_t> n;
    std::vector<std::vector<std::vector<long long>>> raw_rows;  // row -> entry -> factor
    std::vector<std::pair<int, std::string>> row_sources;
    std::vector<std::string> warnings;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = strip(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw SystemFileError("expected 'key = value'", lineno);
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));

        if (key == "modulus") {
            if (moduli) throw SystemFileError("duplicate 'modulus' line", lineno);
            std::vector<u64> ms;
            for (const std::string& tok : split(value, ',')) {
                const long long m = parse_int(strip(tok), lineno);
                if (m < 2) throw SystemFileError("modulus must be >= 2", lineno);
                ms.push_back(static_cast<u64>(m));
            }
            moduli = std::move(ms);
        } else if (key == "n") {
            if (n) throw SystemFileError("duplicate 'n' line", lineno);
            const long long v = parse_int(value, lineno);
            if (v < 1) throw SystemFileError("n must be >= 1", lineno);
            n = static_cast<std::size_t>(v);
        } else if (key == "row") {
            if (!moduli || !n)
                throw SystemFileError("'modulus' and 'n' must precede the rows", lineno);
            std::istringstream toks(value);
            std::vector<std::vector<long long>> entries;
            std::string tok;
            while (toks >> tok) {
                const std::vector<std::string> parts = split(tok, '|');
                if (parts.size() != moduli->size())
                    throw SystemFileError("entry '" + tok + "' must carry " +
                                              std::to_string(moduli->size()) +
                                              " value(s), one per modulus",
                                          lineno);
                std::vector<long long> per_factor;
                for (const std::string& p : parts) per_factor.push_back(parse_int(p, lineno));
                entries.push_back(std::move(per_factor));
            }
            if (entries.size() != *n)
                throw SystemFileError("row has " + std::to_string(entries.size()) +
                                          " entries, expected " + std::to_string(*n),
                                      lineno);
            if (raw_rows.size() == *n) throw SystemFileError("more than n rows", lineno);
            raw_rows.push_back(std::move(entries));
            row_sources.emplace_back(lineno, value);
        } else {
            throw SystemFileError("unknown key '" + key + "'", lineno);
        }
    }

    if (!moduli) throw SystemFileError("missing 'modulus' line in " + path, 0);
    if (!n) throw SystemFileError("missing 'n' line in " + path, 0);
    if (raw_rows.size() != *n)
        throw SystemFileError("expected " + std::to_string(*n) + " rows, got " +
                                  std::to_string(raw_rows.size()) + " in " + path,
                              0);

    RingSpec ring(*moduli);
    std::vector<MatrixZq> components;
    for (std::size_t f = 0; f < moduli->size(); ++f) {
        const Zq zq((*moduli)[f]);
        MatrixZq m(zq, *n, *n);
        for (std::size_t i = 0; i < *n; ++i) {
            for (std::size_t j = 0; j < *n; ++j) {
                const long long v = raw_rows[i][j][f];
                const u64 canon = zq.canonical(v);
                if (v < 0 || static_cast<u64>(v) >= zq.modulus()) {
                    warnings.push_back("entry " + std::to_string(v) + " at row " +
                                       std::to_string(i + 1) + ", column " + std::to_string(j + 1) +
                                       " reduced to " + std::to_string(canon) + " mod " +
                                       std::to_string(zq.modulus()));
                }
                m.set_canonical(i, j, canon);
            }
        }
        components.push_back(std::move(m));
    }

    return SystemFile{std::move(ring), *n, ProductSystem(RingSpec(*moduli), std::move(components)),
                      path, std::move(warnings)};
}

SystemFile load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SystemFileError("cannot open '" + path + "'", 0);
    return parse_system_file(in, path);
}

}  // namespace zqdyn::cli
