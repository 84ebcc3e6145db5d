#include "kd/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace kd {

std::string GeneratorSymbol::str() const
{
    std::string s = name;
    if (index > 0) s += std::to_string(index);
    if (sheet > 0) s += "_" + std::to_string(sheet);
    return s;
}

GeneratorSymbol GeneratorSymbol::parse(const std::string& text)
{
    size_t pos = 0;
    if (pos >= text.size() || !std::islower(static_cast<unsigned char>(text[pos])))
        throw parse_error("bad generator name: '" + text + "'");
    GeneratorSymbol g;
    g.name = text[pos++];
    size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > digits) {
        if (text[digits] == '0')
            throw parse_error("generator index must be a positive integer in '" + text + "'");
        g.index = std::stoi(text.substr(digits, pos - digits));
    }
    if (pos < text.size() && text[pos] == '_') {
        ++pos;
        if (pos + 1 != text.size() || (text[pos] != '1' && text[pos] != '2'))
            throw parse_error("bad sheet suffix in '" + text + "'");
        g.sheet = text[pos] - '0';
        ++pos;
    }
    if (pos != text.size()) throw parse_error("bad generator name: '" + text + "'");
    return g;
}

namespace {

std::vector<Letter> reduce_letters(const std::vector<Letter>& in)
{
    std::vector<Letter> out;
    out.reserve(in.size());
    for (const auto& l : in) {
        if (l.exp != 1 && l.exp != -1) throw domain_error("letter exponent must be +-1");
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

} // namespace

Word::Word(std::vector<Letter> letters) : letters_(reduce_letters(letters)) {}

Word Word::letter(const GeneratorSymbol& g, int exp)
{
    return Word({Letter{g, exp}});
}

Word Word::commutator(const Word& u, const Word& v)
{
    return u * v * u.inverse() * v.inverse();
}

Word Word::operator*(const Word& o) const
{
    std::vector<Letter> cat = letters_;
    cat.insert(cat.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(cat));
}

Word Word::inverse() const
{
    std::vector<Letter> inv;
    inv.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        inv.push_back(Letter{it->gen, -it->exp});
    Word w;
    w.letters_ = std::move(inv); // inverse of a reduced word is reduced
    return w;
}

Word Word::pow(int e) const
{
    Word r;
    Word base = e >= 0 ? *this : inverse();
    for (int i = 0; i < std::abs(e); ++i) r = r * base;
    return r;
}

bool Word::contains(const GeneratorSymbol& g) const
{
    return count_occurrences(g) > 0;
}

int Word::count_occurrences(const GeneratorSymbol& g) const
{
    int n = 0;
    for (const auto& l : letters_)
        if (l.gen == g) ++n;
    return n;
}

Word Word::cyclically_reduced() const
{
    std::vector<Letter> v = letters_;
    while (v.size() >= 2 && v.front().gen == v.back().gen && v.front().exp == -v.back().exp) {
        v.erase(v.begin());
        v.pop_back();
    }
    Word w;
    w.letters_ = std::move(v);
    return w;
}

bool Word::is_rotation_of(const Word& o) const
{
    if (size() != o.size()) return false;
    if (empty()) return true;
    std::vector<Letter> doubled = letters_;
    doubled.insert(doubled.end(), letters_.begin(), letters_.end());
    auto it = std::search(doubled.begin(), doubled.end(), o.letters_.begin(), o.letters_.end());
    return it != doubled.end();
}

std::string Word::str() const
{
    if (letters_.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += " ";
        out += letters_[i].gen.str();
        if (letters_[i].exp == -1) out += "^-1";
    }
    return out;
}

bool Presentation::has(const GeneratorSymbol& g) const
{
    return index_of(g) >= 0;
}

int Presentation::index_of(const GeneratorSymbol& g) const
{
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == g) return static_cast<int>(i);
    return -1;
}

namespace {

// Recursive-descent parser for the word grammar.
struct WordParser {
    const std::string& text;
    const Presentation& ctx;
    size_t pos = 0;

    void skip_space()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end()
    {
        skip_space();
        return pos >= text.size();
    }

    char peek()
    {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    void expect(char c)
    {
        if (peek() != c)
            throw parse_error(std::string("expected '") + c + "' at position " + std::to_string(pos));
        ++pos;
    }

    Word parse_word_seq(bool bracketed)
    {
        Word w;
        while (true) {
            char c = peek();
            if (c == '\0' || c == ',' || c == ']' || c == ')') break;
            w = w * parse_token();
            if (!bracketed && peek() != '\0' && peek() != ',' && peek() != ']' && peek() != ')') {
                // whitespace between top-level tokens was consumed by peek()
            }
        }
        return w;
    }

    Word parse_token()
    {
        Word atom = parse_atom();
        skip_space();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            atom = atom.pow(parse_exponent());
        }
        return atom;
    }

    int parse_exponent()
    {
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error("missing exponent after '^'");
        int e = std::stoi(text.substr(start, pos - start));
        if (e == 0) throw parse_error("zero exponent");
        return e;
    }

    Word parse_atom()
    {
        char c = peek();
        if (c == '[') {
            ++pos;
            Word u = parse_word_seq(true);
            expect(',');
            Word v = parse_word_seq(true);
            expect(']');
            return Word::commutator(u, v);
        }
        if (c == '(') {
            ++pos;
            Word u = parse_word_seq(true);
            expect(')');
            return u;
        }
        if (!std::islower(static_cast<unsigned char>(c)))
            throw parse_error("malformed token at position " + std::to_string(pos));
        size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        GeneratorSymbol g = GeneratorSymbol::parse(text.substr(start, pos - start));
        if (!ctx.has(g)) throw parse_error("unknown generator '" + g.str() + "'");
        return Word::letter(g);
    }
};

} // namespace

Word parse_word(const std::string& text, const Presentation& context)
{
    WordParser p{text, context};
    Word w = p.parse_word_seq(false);
    if (!p.at_end())
        throw parse_error("unexpected '" + std::string(1, p.peek()) + "' at position " +
                          std::to_string(p.pos));
    return w;
}

Word reduce(const Word& w)
{
    return w; // words are reduced by construction; kept for contract clarity
}

Word solve_relator(const Word& r, const GeneratorSymbol& x)
{
    int count = r.count_occurrences(x);
    if (count == 0) throw domain_error("generator '" + x.str() + "' does not occur in relator");
    if (count > 1)
        throw domain_error("generator '" + x.str() + "' occurs " + std::to_string(count) +
                           " times; single occurrence required");

    const auto& ls = r.letters();
    size_t at = 0;
    while (ls[at].gen != x) ++at;

    std::vector<Letter> before(ls.begin(), ls.begin() + at);
    std::vector<Letter> after(ls.begin() + at + 1, ls.end());
    Word u(std::move(before)), v(std::move(after));

    // r = u x v = 1  =>  x = u^-1 v^-1;  r = u x^-1 v = 1  =>  x = v u.
    Word w = ls[at].exp == 1 ? u.inverse() * v.inverse() : v * u;
    if (w.contains(x)) throw internal_error("solve_relator produced a word containing the unknown");
    return w;
}

Word substitute(const Word& w, const GeneratorSymbol& x, const Word& replacement)
{
    if (replacement.contains(x))
        throw domain_error("replacement word contains '" + x.str() + "'");
    Word out;
    for (const auto& l : w.letters()) {
        if (l.gen == x)
            out = out * (l.exp == 1 ? replacement : replacement.inverse());
        else
            out = out * Word::letter(l.gen, l.exp);
    }
    return out;
}

std::vector<Int> abelianize(const Word& w, const std::vector<GeneratorSymbol>& order)
{
    std::map<GeneratorSymbol, size_t> at;
    for (size_t i = 0; i < order.size(); ++i) at[order[i]] = i;
    std::vector<Int> v(order.size(), 0);
    for (const auto& l : w.letters()) {
        auto it = at.find(l.gen);
        if (it == at.end())
            throw domain_error("generator '" + l.gen.str() + "' not in abelianization order");
        v[it->second] += l.exp;
    }
    return v;
}

} // namespace kd
