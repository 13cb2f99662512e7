#pragma once

// Dessins d'enfants as validated permutation triples (x, y, z) with xyz = 1
// and <x, y> transitive. Black vertices are cycles of x, white vertices cycles
// of y, faces cycles of z. Provides passports, genus, mirror images,
// isomorphism testing via canonical forms, and regular-cover genus formulas.

#include "perm.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dsn {

using grp::Permutation;
using grp::u128;

struct NotTransitive : std::runtime_error {
    NotTransitive() : std::runtime_error("monodromy generators are not transitive") {}
};
struct NonIntegralGenus : std::runtime_error {
    NonIntegralGenus() : std::runtime_error("cover genus formula gives a non-integer") {}
};

struct Passport {
    grp::CycleType black, white, faces;
    int degree() const { return black.degree(); }
    bool operator==(const Passport& o) const {
        return black == o.black && white == o.white && faces == o.faces;
    }
    bool operator!=(const Passport& o) const { return !(*this == o); }
    bool operator<(const Passport& o) const {
        if (black != o.black) return black < o.black;
        if (white != o.white) return white < o.white;
        return faces < o.faces;
    }
    std::string str() const; // e.g. "(3^3,1^2; 2^4,1^3; 11^1)"
};

class Dessin {
public:
    Dessin(Permutation x, Permutation y, std::string label = "");

    int degree() const { return x_.degree(); }
    const Permutation& x() const { return x_; }
    const Permutation& y() const { return y_; }
    const Permutation& z() const { return z_; } // (xy)^-1, never stored on disk
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    Passport passport() const;

    // compares (x, y) images only; labels are annotations
    bool operator==(const Dessin& o) const { return x_ == o.x_ && y_ == o.y_; }
    bool operator!=(const Dessin& o) const { return !(*this == o); }
    bool operator<(const Dessin& o) const {
        if (x_ != o.x_) return x_ < o.x_;
        return y_ < o.y_;
    }

private:
    Permutation x_, y_, z_;
    std::string label_;
};

int genus(const Dessin& d);

// Genus of the regular cover of a type-(3,2,p) dessin with monodromy order N:
// 1 + (p-6)*N/(12p). Throws NonIntegralGenus when 12p does not divide (p-6)*N.
long long regular_cover_genus(int p, u128 group_order);
// Same formula for the degree-11 dessins of type (3,2,r) whose monodromy is
// the full symmetric group: 1 + ((r-6)/(12r))*11!.
long long regular_cover_genus_general(int r);

Dessin mirror(const Dessin& d); // (x', y') = (x^-1, y^-1), so z' = yx

// Relabeling that sends d1 to d2 (x1^t = x2 and y1^t = y2), if one exists.
std::optional<Permutation> are_isomorphic(const Dessin& d1, const Dessin& d2);

// Canonical relabeling: two dessins are isomorphic iff canonical forms compare
// equal. Idempotent. Preserves the label.
Dessin canonical_form(const Dessin& d);

grp::CycleType commutator_signature(const Dessin& d); // cycle type of [x,y]

grp::PermGroup monodromy_group(const Dessin& d);
u128 monodromy_order(const Dessin& d);

// Text format, one dessin per record:
//   degree: 11
//   x: (1,4,3)(5,11,9)(6,8,7)
//   y: (1,2)(4,11)(5,8)(9,10)
//   label: M1        (optional)
// Records separated by blank lines; '#' starts a comment line.
std::string print_dessin(const Dessin& d);
std::vector<Dessin> read_dessins(std::istream& in);
std::vector<Dessin> read_dessin_file(const std::string& path);
void write_dessins(std::ostream& out, const std::vector<Dessin>& ds);

} // namespace dsn
