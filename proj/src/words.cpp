#include "qmzv/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qmzv {

const char* type_name(TypeTag t) {
    switch (t) {
        case TypeTag::I: return "i";
        case TypeTag::tI: return "i~";
        case TypeTag::II: return "ii";
        case TypeTag::III: return "iii";
        case TypeTag::IV: return "iv";
        case TypeTag::tIV: return "iv~";
        case TypeTag::G: return "g";
        case TypeTag::O: return "o";
    }
    return "?";
}

TypeTag type_from_name(const std::string& name) {
    std::string n;
    for (char ch : name) n += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (n == "i") return TypeTag::I;
    if (n == "i~" || n == "ti" || n == "~i") return TypeTag::tI;
    if (n == "ii") return TypeTag::II;
    if (n == "iii") return TypeTag::III;
    if (n == "iv") return TypeTag::IV;
    if (n == "iv~" || n == "tiv" || n == "~iv") return TypeTag::tIV;
    if (n == "g") return TypeTag::G;
    if (n == "o") return TypeTag::O;
    throw word_error("unknown type '" + name + "' (expected i, i~, ii, iii, iv, iv~, g, o)");
}

// ---------------------------------------------------------------------------
// CompositionPair
// ---------------------------------------------------------------------------

CompositionPair::CompositionPair(std::vector<int> t_, std::vector<int> s_)
    : t(std::move(t_)), s(std::move(s_)) {
    if (t.size() != s.size()) throw word_error("composition: len(t) != len(s)");
    for (std::size_t j = 0; j < s.size(); ++j)
        if (t[j] < 0 || s[j] < 0) throw word_error("composition: negative entry");
}

int CompositionPair::weight() const { return std::accumulate(s.begin(), s.end(), 0); }

bool CompositionPair::admissible_g() const {
    if (s.empty()) return false;
    if (t[0] < 1 || t[0] > s[0]) return false;
    for (std::size_t j = 1; j < s.size(); ++j)
        if (t[j] < 0 || t[j] > s[j]) return false;
    return true;
}

std::strong_ordering CompositionPair::operator<=>(const CompositionPair& o) const {
    if (auto c = weight() <=> o.weight(); c != 0) return c;
    if (auto c = depth() <=> o.depth(); c != 0) return c;
    for (int j = 0; j < depth(); ++j) {
        if (auto c = t[j] <=> o.t[j]; c != 0) return c;
        if (auto c = s[j] <=> o.s[j]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::string CompositionPair::str() const {
    std::ostringstream out;
    out << "z^(";
    for (int j = 0; j < depth(); ++j) out << (j ? "," : "") << t[j];
    out << ")[";
    for (int j = 0; j < depth(); ++j) out << (j ? "," : "") << s[j];
    out << "]";
    return out.str();
}

int weight_of(const CompositionPair& c) { return c.weight(); }

// ---------------------------------------------------------------------------
// PYWord
// ---------------------------------------------------------------------------

PYWord::PYWord(std::string l) : letters(std::move(l)) {
    for (char ch : letters)
        if (ch != 'r' && ch != 'p' && ch != 'y')
            throw word_error(std::string("bad operator letter '") + ch + "' (want r, p, y)");
}

int PYWord::weight() const {
    return static_cast<int>(std::count_if(letters.begin(), letters.end(),
                                          [](char c) { return c == 'r' || c == 'p'; }));
}

int PYWord::depth() const {
    return static_cast<int>(std::count(letters.begin(), letters.end(), 'y'));
}

bool PYWord::pure() const { return letters.find('p') == std::string::npos; }

bool PYWord::admissible() const {
    if (!ends_with_y()) return false;
    for (char ch : letters) {
        if (ch == 'r') return true;
        if (ch == 'y') return false;
    }
    return false;
}

std::vector<PYRun> py_runs(const PYWord& w) {
    if (!w.letters.empty() && !w.ends_with_y()) throw word_error("word does not end with y: " + w.letters);
    std::vector<PYRun> runs;
    PYRun cur;
    for (char ch : w.letters) {
        if (ch == 'r') ++cur.rho;
        else if (ch == 'p') ++cur.pi;
        else {
            runs.push_back(cur);
            cur = PYRun{};
        }
    }
    return runs;
}

CompositionPair composition_of(const PYWord& w) {
    // Block form only: within each run all rho before all pi.
    std::vector<int> t, s;
    int rho = 0, pi = 0;
    for (char ch : w.letters) {
        if (ch == 'r') {
            if (pi > 0) throw word_error("not block form (pi before rho): " + w.letters);
            ++rho;
        } else if (ch == 'p') {
            ++pi;
        } else {
            t.push_back(rho);
            s.push_back(rho + pi);
            rho = pi = 0;
        }
    }
    if (rho || pi) throw word_error("word does not end with y: " + w.letters);
    return CompositionPair(std::move(t), std::move(s));
}

PYWord word_of(const CompositionPair& c) {
    std::string out;
    for (int j = 0; j < c.depth(); ++j) {
        if (c.t[j] > c.s[j]) throw word_error("word_of: t_j > s_j in " + c.str());
        out.append(c.t[j], 'r');
        out.append(c.s[j] - c.t[j], 'p');
        out.push_back('y');
    }
    return PYWord(out);
}

PYWord dual(const PYWord& w) {
    if (!w.pure()) throw word_error("dual: word contains pi, P-R-expand first: " + w.letters);
    if (!w.admissible()) throw word_error("dual: word not admissible: " + w.letters);
    std::string out(w.letters.rbegin(), w.letters.rend());
    for (char& ch : out) ch = (ch == 'r') ? 'y' : 'r';
    return PYWord(out);
}

// ---------------------------------------------------------------------------
// ZWord
// ---------------------------------------------------------------------------

ZLetter ZWord::letter(int j) const {
    const int t = ts.t[j], s = ts.s[j];
    switch (type) {
        case TypeTag::I:
        case TypeTag::tI:
            if (t == 1 && s == 1) return {ZKind::Theta, 1, 1};
            if (t == s - 1) return {ZKind::Z, t, s};
            break;
        case TypeTag::II:
            if (t == s) return {ZKind::ZPrime, t, s};
            break;
        case TypeTag::III:
            if (j == 0 && t == 1) return {ZKind::ZPrime, t, s};
            if (j > 0 && t == 0) return {ZKind::Z, t, s};
            break;
        case TypeTag::IV:
        case TypeTag::tIV:
            if (j == 0) {
                if (t == 1 && s == 1) return {ZKind::Theta, 1, 1};
                if (t == s - 1) return {ZKind::Z, t, s};
            } else if (t == s) {
                return {ZKind::ZPrime, t, s};
            }
            break;
        case TypeTag::G:
            if (t <= s) return {ZKind::ZG, t, s};
            break;
        case TypeTag::O:
            return {ZKind::ZO, t, s};
    }
    throw word_error(std::string("letter (") + std::to_string(t) + "," + std::to_string(s) +
                     ") at position " + std::to_string(j) + " is not a type " + type_name(type) +
                     " letter");
}

std::strong_ordering ZWord::operator<=>(const ZWord& o) const {
    if (auto c = type <=> o.type; c != 0) return c;
    return ts <=> o.ts;
}

std::string ZWord::str() const {
    std::ostringstream out;
    if (ts.depth() == 0) return "1";
    for (int j = 0; j < ts.depth(); ++j) {
        ZLetter l = letter(j);
        if (j) out << ".";
        switch (l.kind) {
            case ZKind::Theta: out << "th"; break;
            case ZKind::Z: out << "z" << l.s; break;
            case ZKind::ZPrime: out << "z'" << l.s; break;
            case ZKind::ZG: out << "z{" << l.t << "," << l.s << "}"; break;
            case ZKind::ZO: out << "z" << l.s; break;
        }
    }
    return out.str();
}

bool zword_admissible(const ZWord& w) {
    const auto& t = w.ts.t;
    const auto& s = w.ts.s;
    const int d = w.ts.depth();
    auto is_theta = [&](int j) { return t[j] == 1 && s[j] == 1; };
    switch (w.type) {
        case TypeTag::I:
            for (int j = 0; j < d; ++j)
                if (t[j] != s[j] - 1 || s[j] < 1) return false;
            return d >= 1 && s[0] >= 2;
        case TypeTag::tI:
            for (int j = 0; j < d; ++j)
                if (!is_theta(j) && (t[j] != s[j] - 1 || s[j] < 1)) return false;
            return d >= 1 && (is_theta(0) || s[0] >= 2);
        case TypeTag::II:
            for (int j = 0; j < d; ++j)
                if (t[j] != s[j]) return false;
            return d >= 1 && s[0] >= 1;
        case TypeTag::III:
            if (d < 1 || t[0] != 1 || s[0] < 1) return false;
            for (int j = 1; j < d; ++j)
                if (t[j] != 0) return false;
            return true;
        case TypeTag::IV:
            if (d < 1 || s[0] < 2 || t[0] != s[0] - 1) return false;
            for (int j = 1; j < d; ++j)
                if (t[j] != s[j]) return false;
            return true;
        case TypeTag::tIV:
            if (d < 1) return false;
            if (!is_theta(0) && (s[0] < 2 || t[0] != s[0] - 1)) return false;
            for (int j = 1; j < d; ++j)
                if (t[j] != s[j]) return false;
            return true;
        case TypeTag::G:
            return w.ts.admissible_g();
        case TypeTag::O:
            for (int j = 0; j < d; ++j)
                if (s[j] < 2) return false;
            return d >= 1;
    }
    return false;
}

CompositionPair zword_to_composition(const ZWord& w) {
    if (!zword_admissible(w))
        throw word_error("inadmissible type " + std::string(type_name(w.type)) + " word: " + w.ts.str());
    return w.ts;
}

ZWord zword_from_composition(TypeTag type, const CompositionPair& c) {
    ZWord w{type, c};
    (void)zword_to_composition(w); // validates
    return w;
}

PYWord zword_to_py(const ZWord& w) {
    std::string out;
    const int d = w.ts.depth();
    for (int j = 0; j < d; ++j) {
        ZLetter l = w.letter(j);
        switch (l.kind) {
            case ZKind::Theta:
                out += "ry";
                break;
            case ZKind::Z:
                if (w.type == TypeTag::III) { // tail letter pi^s y
                    out.append(l.s, 'p');
                    out.push_back('y');
                } else { // rho^{s-1} pi y
                    out.append(l.s - 1, 'r');
                    out += "py";
                }
                break;
            case ZKind::ZPrime:
                if (w.type == TypeTag::III) { // head letter pi^{s-1} rho y
                    out.append(l.s - 1, 'p');
                    out += "ry";
                } else { // rho^s y
                    out.append(l.s, 'r');
                    out.push_back('y');
                }
                break;
            case ZKind::ZG:
                out.append(l.t, 'r');
                out.append(l.s - l.t, 'p');
                out.push_back('y');
                break;
            case ZKind::ZO:
                throw word_error("type O words have no single operator word; use oword_expand");
        }
    }
    return PYWord(out);
}

} // namespace qmzv
