#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "kd/matrix.hpp"

namespace kd {

/// A free-group generator.  `sheet` tags the two copies of a generator in a
/// double cover (0 = untagged, else 1 or 2); `index` is the subscript in
/// families like a1, b3 (0 = none).
struct GeneratorSymbol {
    std::string name;
    int index = 0;
    int sheet = 0;

    auto operator<=>(const GeneratorSymbol&) const = default;

    std::string str() const;

    /// Parses "a", "b12", "c_1", "a3_2".  Grammar: [a-z][0-9]* with optional
    /// sheet suffix "_1" or "_2".
    static GeneratorSymbol parse(const std::string& text);
};

struct Letter {
    GeneratorSymbol gen;
    int exp = 1; // +1 or -1

    auto operator<=>(const Letter&) const = default;
};

/// A freely reduced word in a free group.  All constructors and operations
/// reduce eagerly, so adjacent inverse pairs never survive; the empty word is
/// the identity.  Values are immutable after construction.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    static Word letter(const GeneratorSymbol& g, int exp = 1);
    static Word commutator(const Word& u, const Word& v); // u v u^-1 v^-1

    const std::vector<Letter>& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    Word operator*(const Word& o) const; // concatenation, reduced
    Word inverse() const;
    Word conjugate(const Word& by) const { return by * (*this) * by.inverse(); }
    Word pow(int e) const;

    bool operator==(const Word&) const = default;

    bool contains(const GeneratorSymbol& g) const;
    int count_occurrences(const GeneratorSymbol& g) const;

    /// Removes cancelling prefix/suffix pairs: the cyclic word it represents
    /// is unchanged.
    Word cyclically_reduced() const;

    /// True if `o` is a cyclic rotation of this word.
    bool is_rotation_of(const Word& o) const;

    std::string str() const; // e.g. "c^2 [a1,b1]" prints as "c c a1 b1 a1^-1 b1^-1"

private:
    std::vector<Letter> letters_;
};

/// A finite group presentation: ordered generators plus relator words.
struct Presentation {
    std::vector<GeneratorSymbol> generators;
    std::vector<Word> relators;

    bool has(const GeneratorSymbol& g) const;
    int index_of(const GeneratorSymbol& g) const; // -1 if absent
};

/// Parses the word grammar:
///   word  := token (SP token)*
///   token := atom | atom "^" k          (k nonzero integer; "^-1" inverts)
///   atom  := IDENT | "[" word "," word "]" | "(" word ")"
/// Commutator sugar [x,y] expands to x y x^-1 y^-1.  Every identifier must
/// resolve against the presentation's generator list.
Word parse_word(const std::string& text, const Presentation& context);

/// Unique freely reduced form.  Words are kept reduced by construction, so
/// this is mostly useful for raw letter sequences.
Word reduce(const Word& w);

/// Solves relator r = 1 for x, which must occur exactly once in r:  returns
/// the word w, free of x, with substitute(r, x, w) the identity.
Word solve_relator(const Word& r, const GeneratorSymbol& x);

/// Replaces every x^(+-1) in w by replacement^(+-1) and reduces.  The
/// replacement must not contain x.
Word substitute(const Word& w, const GeneratorSymbol& x, const Word& replacement);

/// Exponent-sum vector of w with respect to the given generator order.
std::vector<Int> abelianize(const Word& w, const std::vector<GeneratorSymbol>& order);

} // namespace kd
