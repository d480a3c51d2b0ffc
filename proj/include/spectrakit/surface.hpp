#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectrakit/hypgeom.hpp"

namespace spectrakit::surface {

using hypgeom::MobiusTransform;

enum class Topology { OneHoledTorus, ClosedGenus2 };

// A word in the group generators. Letter k+1 stands for generator k,
// letter -(k+1) for its inverse. The string form uses 'a','b','c','d'
// for generators and 'A','B','C','D' for inverses.
using Word = std::vector<int>;

Word parse_word(const std::string& text, int generator_count);
std::string word_to_string(const Word& w);
Word inverse_word(const Word& w);
Word reduce_word(Word w);

// Pants-decomposition data: cuff lengths and twist offsets, in length units.
// One interior curve for the one-holed torus, three cuffs for genus 2.
// boundary_length is only meaningful for the torus and is filled in by the
// builder (it is determined by the interior length, not free data).
struct FenchelNielsenSurface {
    Topology topology = Topology::ClosedGenus2;
    std::vector<double> cuff_lengths;
    std::vector<double> twists;
    std::optional<double> boundary_length;

    void validate() const;
};

enum class Presentation { Free2, Genus2Standard };

// A discrete group of hyperbolic-plane isometries given by generators.
// Free2 holds the two generators of a one-holed torus group; Genus2Standard
// holds four generators whose commutator product [g1,g2][g3,g4] is +/-I.
struct FuchsianGroup {
    std::vector<MobiusTransform> generators;
    Presentation presentation = Presentation::Free2;

    MobiusTransform evaluate(const Word& w) const;
    int generator_count() const { return static_cast<int>(generators.size()); }
};

// One arc of a curve-and-arc decomposition: the labels of its two endpoint
// curves plus which pants (side) of the decomposition it lives in.
struct ArcRecord {
    std::string label;
    int curve_i = 0;
    int curve_j = 0;
    int pants = 0; // 0 = first pants, 1 = mirror pants
};

// Labeled curves, arcs and chains of the genus-2 pants-decomposition
// curve-and-chain system together with the measured length/twist data.
struct CurveChainSystem {
    std::vector<std::string> curve_labels;
    std::vector<Word> curves;
    std::vector<ArcRecord> arcs;
    std::vector<Word> chains; // one per arc
    std::vector<double> curve_lengths;
    std::vector<double> twist_params;
    std::vector<double> chain_lengths;

    void validate() const;
};

// Named words of the standard genus-2 construction, for spectra tests,
// curve-and-chain measurement and transversal curves.
struct Genus2Words {
    std::vector<Word> cuffs;        // 3 entries
    std::vector<Word> chains;       // 6 entries, matching CurveChainSystem order
    std::vector<Word> transversals; // 3 entries, one crossing each cuff
};

Genus2Words genus2_words();

// One-holed torus from (interior curve length, twist). The generator A
// translates by interior_length along its axis; B is seeded with the same
// translation length and composed with the half-twist translation on both
// sides. The commutator [A,B] is the boundary curve; its length is a
// function of interior_length alone.
FuchsianGroup build_one_holed_torus(double interior_length, double twist);

// Boundary length of the torus built with this interior length (twist-free).
double one_holed_torus_boundary_length(double interior_length);

// Interior length whose torus has the prescribed boundary length.
double interior_length_for_boundary(double boundary_length);

// Genus-2 surface from Fenchel-Nielsen data on the two-pants (theta graph)
// decomposition: two mirror-image pants glued along all three cuffs.
FuchsianGroup build_genus2(const FenchelNielsenSurface& fn);

// Dispatch on fn.topology; for the torus, fills fn-independent data only.
FuchsianGroup build(const FenchelNielsenSurface& fn);

// Translation length of the word's matrix. Throws NotHyperbolic when the
// class is trivial or parabolic within tolerance.
double curve_length(const FuchsianGroup& group, const Word& word);

// Measures the curve-and-chain data (curve lengths, twists, chain lengths)
// realized by the genus-2 surface with the given Fenchel-Nielsen data.
CurveChainSystem measure_curve_chain(const FenchelNielsenSurface& fn);

// Recovers Fenchel-Nielsen data from a pants-decomposition curve-and-chain
// system. Cuff lengths come directly from curve_lengths, twists from
// twist_params; every chain is checked for compatibility with its endpoint
// cuffs and against the third cuff it determines.
FenchelNielsenSurface cc_reconstruct(const CurveChainSystem& cc);

// Orthogeodesic lengths recovered from the chain data, one per arc.
std::vector<double> cc_arc_lengths(const CurveChainSystem& cc);

// All twists t in [0, period) of the free cuff with
// curve_length(build(fn with twist t), word) = target_length. The length
// function is convex in t, so there are at most two; they are found by
// bisection on the two monotone branches around the minimum.
std::vector<double> twist_solutions(const FenchelNielsenSurface& family, int free_twist_index,
                                    const Word& transversal_word, double target_length);

} // namespace spectrakit::surface
