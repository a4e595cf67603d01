#include "toricnc/formats.hpp"

#include <cctype>
#include <cstdint>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace toricnc {

namespace {

std::string strip_space(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

long parse_long(const std::string& s) {
    size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (...) {
        throw std::invalid_argument("expected a number");
    }
    if (pos != s.size() || s.empty()) throw std::invalid_argument("expected a number");
    return v;
}

}  // namespace

json int_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return json(v.convert_to<std::int64_t>());
    return json(v.str());
}

json rat_json(const Rat& c) {
    const Int num = numerator(c);
    const Int den = denominator(c);
    if (den == 1) return int_json(num);
    return json(num.str() + "/" + den.str());
}

std::string partition_text(const NcPartition& p) {
    const bool commas = p.d > 9;
    std::string out;
    for (const auto& b : p.blocks) {
        out += '(';
        for (size_t t = 0; t < b.size(); ++t) {
            if (t > 0 && commas) out += ',';
            out += std::to_string(b[t]);
        }
        out += ')';
    }
    return out;
}

NcPartition parse_partition(const std::string& text) {
    const std::string s = strip_space(text);
    if (s.empty() || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("cannot parse partition");
    const bool commas = s.find(',') != std::string::npos;
    std::vector<std::vector<int>> blocks;
    long total = 0;
    size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != '(') throw std::invalid_argument("cannot parse partition");
        const size_t close = s.find(')', pos);
        if (close == std::string::npos) throw std::invalid_argument("cannot parse partition");
        const std::string body = s.substr(pos + 1, close - pos - 1);
        if (body.empty()) throw std::invalid_argument("cannot parse partition");
        std::vector<int> block;
        if (commas) {
            size_t start = 0;
            while (true) {
                const size_t comma = body.find(',', start);
                const std::string tok =
                    body.substr(start, comma == std::string::npos ? std::string::npos
                                                                  : comma - start);
                block.push_back(static_cast<int>(parse_long(tok)));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        } else {
            for (char c : body) {
                if (c < '1' || c > '9') throw std::invalid_argument("cannot parse partition");
                block.push_back(c - '0');
            }
        }
        total += static_cast<long>(block.size());
        blocks.push_back(std::move(block));
        pos = close + 1;
    }
    return make_nc_partition(static_cast<int>(total), std::move(blocks));
}

std::string family_text(const IntervalFamily& s) {
    std::string out = "{";
    const auto& iv = s.intervals();
    for (size_t t = 0; t < iv.size(); ++t) {
        if (t > 0) out += ',';
        out += '[' + std::to_string(iv[t].lo);
        if (iv[t].lo != iv[t].hi) out += ',' + std::to_string(iv[t].hi);
        out += ']';
    }
    if (s.star()) out += '*';
    out += '}';
    return out;
}

IntervalFamily parse_family(int d, const std::string& text) {
    std::string s = strip_space(text);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw std::invalid_argument("cannot parse interval family");
    s = s.substr(1, s.size() - 2);
    bool star = false;
    if (!s.empty() && s.back() == '*') {
        star = true;
        s.pop_back();
    }
    std::vector<CyclicInterval> ivs;
    size_t pos = 0;
    while (pos < s.size()) {
        if (!ivs.empty()) {
            if (s[pos] != ',') throw std::invalid_argument("cannot parse interval family");
            ++pos;
        }
        if (pos >= s.size() || s[pos] != '[')
            throw std::invalid_argument("cannot parse interval family");
        const size_t close = s.find(']', pos);
        if (close == std::string::npos)
            throw std::invalid_argument("cannot parse interval family");
        const std::string body = s.substr(pos + 1, close - pos - 1);
        const size_t comma = body.find(',');
        CyclicInterval iv;
        if (comma == std::string::npos) {
            iv.lo = iv.hi = static_cast<int>(parse_long(body));
        } else {
            if (body.find(',', comma + 1) != std::string::npos)
                throw std::invalid_argument("cannot parse interval family");
            iv.lo = static_cast<int>(parse_long(body.substr(0, comma)));
            iv.hi = static_cast<int>(parse_long(body.substr(comma + 1)));
        }
        ivs.push_back(iv);
        pos = close + 1;
    }
    if (star && s.empty()) throw std::invalid_argument("cannot parse interval family");
    return IntervalFamily(d, std::move(ivs), star);
}

std::string fvector_text(const FVector& fv) {
    std::ostringstream os;
    for (int j = 0; j <= fv.d; ++j) {
        if (j > 0) os << ',';
        os << fv.f[j];
    }
    return os.str();
}

FVector parse_fvector(const std::string& text) {
    const std::string s = strip_space(text);
    if (s.empty()) throw std::invalid_argument("cannot parse f-vector");
    std::vector<Int> f;
    size_t start = 0;
    while (true) {
        const size_t comma = s.find(',', start);
        const std::string tok =
            s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("cannot parse f-vector");
        f.emplace_back(tok);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return make_fvector(std::move(f));
}

CVector parse_cvector_file(int d, std::istream& in) {
    CVector c(d);
    std::string line;
    while (std::getline(in, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long i = 0;
        long j = 0;
        std::string count;
        if (!(ls >> i)) continue;
        if (!(ls >> j >> count)) throw std::invalid_argument("cannot parse c-vector line");
        std::string rest;
        if (ls >> rest) throw std::invalid_argument("cannot parse c-vector line");
        if (count.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("cannot parse c-vector line");
        c.add({static_cast<int>(i), static_cast<int>(j)}, Int(count));
    }
    return c;
}

std::string poly_csv(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    for (int l = 0; l <= p.degree(); ++l) {
        if (l > 0) os << ',';
        os << p.coeff(l);
    }
    return os.str();
}

json poly_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(rat_json(c));
    return arr;
}

json fvector_json(const FVector& fv) {
    json arr = json::array();
    for (const auto& e : fv.f) arr.push_back(int_json(e));
    return arr;
}

json cvector_json(const CVector& c) {
    json arr = json::array();
    for (const auto& [t, n] : c.counts()) {
        json e;
        e["i"] = t.i;
        e["j"] = t.j;
        e["count"] = int_json(n);
        arr.push_back(std::move(e));
    }
    return arr;
}

json qtable_json(const QTable& t) {
    json out;
    out["d"] = t.d;
    json rows = json::array();
    for (const auto& q : t.q) rows.push_back(poly_json(q));
    out["q"] = std::move(rows);
    return out;
}

json complex_json(const FaceComplex& p) {
    json out;
    out["d"] = p.d;
    json faces = json::array();
    for (const auto& f : p.faces) {
        json jf;
        jf["dim"] = f.dim;
        jf["subfaces"] = f.subfaces;
        faces.push_back(std::move(jf));
    }
    out["faces"] = std::move(faces);
    return out;
}

FaceComplex parse_complex_json(const json& j) {
    FaceComplex p;
    try {
        p.d = j.at("d").get<int>();
        for (const auto& jf : j.at("faces")) {
            Face f;
            f.dim = jf.at("dim").get<int>();
            for (const auto& s : jf.at("subfaces")) f.subfaces.push_back(s.get<int>());
            p.faces.push_back(std::move(f));
        }
    } catch (const json::exception&) {
        throw std::invalid_argument("cannot parse face complex");
    }
    return p;
}

}  // namespace toricnc
