#pragma once

// Formal algebra of cuspidal lines, segments and multisegments.
//
// A cuspidal line is the unramified-twist orbit of a supercuspidal, recorded
// by name, by the degree of its members, by its image under the conjugate-dual
// involution and, when fixed by that involution, by the sign of the invariant
// pairing on the unitary base point. A segment St(l, line, e) is an
// essentially square-integrable datum; a multisegment is a multiset of
// segments together with the line table they refer to.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mseg/error.hpp"
#include "mseg/halfint.hpp"

namespace mseg {

struct CuspidalLine {
    std::string name;
    std::int64_t degree = 1;
    // Image of the line under the involution; equals name for self-dual lines.
    std::string sigma_partner;
    // +1 orthogonal, -1 symplectic; present exactly when sigma_partner == name.
    std::optional<int> self_sign;

    bool self_dual() const { return sigma_partner == name; }

    friend bool operator==(const CuspidalLine&, const CuspidalLine&) = default;
};

class LineTable {
public:
    LineTable() = default;

    void add(CuspidalLine line);  // throws duplicate_name
    bool contains(std::string_view name) const;
    const CuspidalLine& at(std::string_view name) const;  // throws dangling_line
    const std::map<std::string, CuspidalLine, std::less<>>& lines() const { return lines_; }
    bool empty() const { return lines_.empty(); }

    friend bool operator==(const LineTable&, const LineTable&) = default;

private:
    std::map<std::string, CuspidalLine, std::less<>> lines_;
};

// Checks that sigma_partner is a degree-preserving involution on the table
// and that sign data is present exactly on the self-paired lines.
void validate_line_table(const LineTable& table);

struct Cuspidal {
    std::string line;
    HalfInt exponent;  // twist of the unitary base point

    friend auto operator<=>(const Cuspidal&, const Cuspidal&) = default;
};

struct Segment {
    Cuspidal cuspidal;
    std::int64_t length = 1;

    const std::string& line() const { return cuspidal.line; }
    HalfInt exponent() const { return cuspidal.exponent; }
    // Slope of the absolute central character; equals the exponent because
    // base points are unitary.
    HalfInt central_slope() const { return cuspidal.exponent; }
    std::int64_t ambient_degree(const LineTable& table) const {
        return length * table.at(cuspidal.line).degree;
    }

    friend auto operator<=>(const Segment&, const Segment&) = default;
};

// St(length, line, exponent) in generalized Steinberg notation.
Segment st(std::int64_t length, std::string line, HalfInt exponent = HalfInt(0));

struct Multisegment {
    LineTable table;
    std::vector<Segment> segments;  // a multiset; order carries no meaning

    std::int64_t total_degree() const;

    friend bool operator==(const Multisegment&, const Multisegment&) = default;
};

// Table involution checks plus: every referenced line is declared and every
// segment length is positive.
void validate_multisegment(const Multisegment& pi);

// The conjugate-dual involution: swaps a line with its partner and negates
// the exponent; the length is unchanged.
Segment sigma(const Segment& seg, const LineTable& table);
Multisegment sigma(const Multisegment& pi);

// Equality of Zelevinsky data: same line, same length, same exponent.
bool is_isomorphic(const Segment& a, const Segment& b);

bool is_conjugate_self_dual(const Segment& seg, const LineTable& table);

// Sign of the invariant pairing on a conjugate self-dual segment: the base
// point's sign, kept for odd length and flipped for even length. Empty when
// the segment is not conjugate self-dual.
std::optional<int> segment_sign(const Segment& seg, const LineTable& table);

// Segments ordered by descending central slope; ties broken by line name,
// then descending length, then exponent, so the order is reproducible.
std::vector<Segment> langlands_sort(const Multisegment& pi);

}  // namespace mseg
