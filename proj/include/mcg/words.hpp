#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcg {

// A letter is a nonzero integer: +k is generator k (1-based), -k its inverse.
using Letter = int32_t;

class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> labels);

    int rank() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int index) const { return labels_.at(index); }
    const std::vector<std::string>& labels() const { return labels_; }
    // index of a label, or -1
    int find(const std::string& label) const;

    bool operator==(const Alphabet& o) const { return labels_ == o.labels_; }
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

private:
    std::vector<std::string> labels_;
};

// A freely reduced word.  Immutable by convention: all operations return
// fresh values.
class Word {
public:
    Word() = default;
    // reduces on construction
    explicit Word(std::vector<Letter> letters);

    static Word letter(int index1based, int sign = 1) {
        return Word({sign > 0 ? Letter(index1based) : Letter(-index1based)});
    }

    bool empty() const { return letters_.empty(); }
    size_t size() const { return letters_.size(); }
    const std::vector<Letter>& letters() const { return letters_; }
    Letter operator[](size_t i) const { return letters_[i]; }

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator!=(const Word& o) const { return !(*this == o); }
    bool operator<(const Word& o) const { return letters_ < o.letters_; }

private:
    friend Word multiply(const Word&, const Word&);
    friend Word invert(const Word&);
    std::vector<Letter> letters_;
};

Word reduce(const std::vector<Letter>& raw);
Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
// c * w * c^-1
Word conjugate(const Word& w, const Word& c);
Word power(const Word& w, int n);

// core with no cancelling first/last pair, and c with w = c * core * c^-1
struct CyclicReduction {
    Word core;
    Word conjugator;
};
CyclicReduction cyclic_reduce(const Word& w);

// some c with c*u*c^-1 == v, if u ~ v; decided via cyclic reduction and
// rotation scan
std::optional<Word> solve_conjugator(const Word& u, const Word& v);

// text form: labels, ^-1 for inverses, separated by whitespace or '*'
std::string print_word(const Alphabet& a, const Word& w);
Word parse_word(const Alphabet& a, const std::string& text);

// exponent-sum vector, one entry per generator
std::vector<long long> abelianize(const Word& w, int rank);

class WordError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mcg
