#ifndef GREX_DIAGRAM_HPP
#define GREX_DIAGRAM_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace grex {

// Weakly decreasing integer sequence with trailing zeros trimmed.
// Rows of negative length are allowed (dominant GL weights); operations
// that only make sense for honest partitions reject them.
class Diagram {
public:
    Diagram() = default;

    explicit Diagram(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i - 1] < parts_[i])
                throw std::invalid_argument("Diagram: parts not weakly decreasing");
        trim();
    }

    Diagram(std::initializer_list<int> parts) : Diagram(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    std::size_t rows() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    long long boxCount() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }

    bool nonNegative() const {
        return parts_.empty() || parts_.back() >= 0;
    }

    // Fixed-length view, padded with zeros.
    std::vector<int> padded(std::size_t len) const {
        if (parts_.size() > len)
            throw std::invalid_argument("Diagram::padded: more parts than requested length");
        std::vector<int> v(parts_);
        v.resize(len, 0);
        return v;
    }

    friend bool operator==(const Diagram& a, const Diagram& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Diagram& a, const Diagram& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        os << ']';
        return os.str();
    }

    // Parses the "[a,b,c]" serialization; "[]" is the empty diagram.
    static Diagram parse(const std::string& s) {
        std::size_t a = s.find('[');
        std::size_t b = s.rfind(']');
        if (a == std::string::npos || b == std::string::npos || b < a)
            throw std::invalid_argument("Diagram::parse: expected [..]");
        std::string body = s.substr(a + 1, b - a - 1);
        std::vector<int> parts;
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.find_first_not_of(" \t") == std::string::npos) continue;
            parts.push_back(std::stoi(tok));
        }
        return Diagram(std::move(parts));
    }

private:
    void trim() {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    std::vector<int> parts_;
};

struct BoxSpec {
    int w = 0;  // width
    int h = 0;  // height

    BoxSpec(int w_, int h_) : w(w_), h(h_) {
        if (w < 0 || h < 0) throw std::invalid_argument("BoxSpec: negative dimension");
    }
};

// Lattice-path boundary word: bit 0 = right-step, bit 1 = up-step, read
// from the lower-left corner of the box; exactly h ones.
struct BitWord {
    std::vector<std::uint8_t> bits;

    std::string str() const {
        std::string s;
        for (auto b : bits) s += char('0' + b);
        return s;
    }

    static BitWord parse(const std::string& s) {
        BitWord w;
        for (char c : s) {
            if (c != '0' && c != '1') throw std::invalid_argument("BitWord::parse: not a 0/1 string");
            w.bits.push_back(std::uint8_t(c - '0'));
        }
        return w;
    }

    friend bool operator==(const BitWord&, const BitWord&) = default;
};

struct BandCut {
    Diagram cut;       // the cut diagram
    long long removed; // number of boxes removed
};

inline bool fitsInBox(const Diagram& d, const BoxSpec& box) {
    return d.nonNegative() && int(d.rows()) <= box.h && d.part(0) <= box.w;
}

// Containment after zero padding; both arguments must be valid diagrams
// (weak decrease is enforced at construction).
inline bool contains(const Diagram& a, const Diagram& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        if (b.part(i) > a.part(i)) return false;
    return true;
}

inline Diagram twist(const Diagram& d, int t, std::size_t len) {
    std::vector<int> v = d.padded(len);
    for (int& x : v) x += t;
    return Diagram(std::move(v));
}

inline Diagram transpose(const Diagram& d) {
    if (!d.nonNegative())
        throw std::invalid_argument("transpose: negative part");
    std::vector<int> cols;
    cols.reserve(std::size_t(d.part(0)));
    for (int c = 1; c <= d.part(0); ++c) {
        int cnt = 0;
        for (std::size_t r = 0; r < d.rows(); ++r)
            if (d.part(r) >= c) ++cnt;
        cols.push_back(cnt);
    }
    return Diagram(std::move(cols));
}

// All diagrams in the box, graded-lexicographic: by box count, then
// lexicographic on parts.  This order refines containment.
inline std::vector<Diagram> enumerateBox(const BoxSpec& box) {
    std::vector<Diagram> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int maxPart, int height) -> void {
        out.push_back(Diagram(cur));
        if (height == 0) return;
        for (int p = 1; p <= maxPart; ++p) {
            cur.push_back(p);
            self(self, p, height - 1);
            cur.pop_back();
        }
    };
    rec(rec, box.w, box.h);
    std::sort(out.begin(), out.end(), [](const Diagram& a, const Diagram& b) {
        if (a.boxCount() != b.boxCount()) return a.boxCount() < b.boxCount();
        return a.parts() < b.parts();
    });
    return out;
}

inline BitWord encodeBinary(const Diagram& d, const BoxSpec& box) {
    if (!fitsInBox(d, box))
        throw std::invalid_argument("encodeBinary: diagram does not fit in box");
    BitWord w;
    w.bits.reserve(std::size_t(box.w + box.h));
    int prev = 0;  // lambda_{h+1} = 0
    for (int r = box.h; r >= 1; --r) {
        int cur = d.part(std::size_t(r - 1));
        for (int i = 0; i < cur - prev; ++i) w.bits.push_back(0);
        w.bits.push_back(1);
        prev = cur;
    }
    for (int i = 0; i < box.w - prev; ++i) w.bits.push_back(0);
    return w;
}

inline Diagram decodeBinary(const BitWord& word, const BoxSpec& box) {
    if (int(word.bits.size()) != box.w + box.h)
        throw std::invalid_argument("decodeBinary: wrong word length");
    int ones = 0;
    for (auto b : word.bits) ones += b;
    if (ones != box.h)
        throw std::invalid_argument("decodeBinary: wrong ones count");
    std::vector<int> rev;  // lambda_h first
    int rights = 0;
    for (auto b : word.bits) {
        if (b == 0) ++rights;
        else rev.push_back(rights);
    }
    std::vector<int> parts(rev.rbegin(), rev.rend());
    return Diagram(std::move(parts));
}

// d applied to the rotation a_1..a_N -> a_N a_1..a_{N-1}, i.e. rotate
// right by `steps` (negative = inverse).
inline Diagram cyclicShift(const Diagram& d, const BoxSpec& box, long long steps) {
    BitWord w = encodeBinary(d, box);
    long long N = box.w + box.h;
    if (N == 0) return d;
    long long s = ((steps % N) + N) % N;
    std::vector<std::uint8_t> rot(w.bits.size());
    for (long long i = 0; i < N; ++i)
        rot[std::size_t((i + s) % N)] = w.bits[std::size_t(i)];
    return decodeBinary(BitWord{std::move(rot)}, box);
}

// Band cuts of a maximal-width diagram, via the transpose formulas.
inline std::vector<BandCut> bandCuts(const Diagram& d, const BoxSpec& box) {
    if (!fitsInBox(d, box))
        throw std::invalid_argument("bandCuts: diagram does not fit in box");
    int w = box.w;
    if (d.part(0) != w)
        throw std::invalid_argument("bandCuts: diagram does not have maximal width");
    Diagram t = transpose(d);
    std::vector<BandCut> out;
    out.reserve(std::size_t(w));
    for (int i = 1; i <= w; ++i) {
        // keep columns 1..w-i, then columns w-i+2..w each shortened by one
        std::vector<int> cols;
        for (int j = 1; j <= w - i; ++j) cols.push_back(t.part(std::size_t(j - 1)));
        for (int j = w - i + 2; j <= w; ++j) cols.push_back(t.part(std::size_t(j - 1)) - 1);
        Diagram cutT(std::move(cols));
        Diagram cut = transpose(cutT);
        out.push_back(BandCut{cut, d.boxCount() - cut.boxCount()});
    }
    return out;
}

// Band cuts via the bit-flip rule: flip the i-th zero (counted from the
// right end of the word) to 1 and set the last bit to 0.
inline std::vector<BandCut> bandCutsBinary(const Diagram& d, const BoxSpec& box) {
    if (d.part(0) != box.w)
        throw std::invalid_argument("bandCutsBinary: diagram does not have maximal width");
    BitWord word = encodeBinary(d, box);
    std::vector<std::size_t> zeros;  // indices of zero bits, descending
    for (std::size_t i = word.bits.size(); i-- > 0;)
        if (word.bits[i] == 0) zeros.push_back(i);
    std::vector<BandCut> out;
    for (int i = 1; i <= box.w; ++i) {
        BitWord v = word;
        v.bits[zeros[std::size_t(i - 1)]] = 1;
        v.bits.back() = 0;
        Diagram cut = decodeBinary(v, box);
        out.push_back(BandCut{cut, d.boxCount() - cut.boxCount()});
    }
    return out;
}

}  // namespace grex

#endif
