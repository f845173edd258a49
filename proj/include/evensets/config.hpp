#ifndef EVENSETS_CONFIG_HPP
#define EVENSETS_CONFIG_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "evensets/catalog.hpp"
#include "evensets/doublecover.hpp"
#include "evensets/fibers.hpp"
#include "evensets/lattice.hpp"

namespace evensets {

// ════════════════════════════════════════════════════════════════════
// Problem files
//
// Line-oriented text format, '#' to end of line is a comment:
//
//   ambient plane|quadric
//   k <int>
//   regularity regular|irregular|unknown
//   curve <c0> <c1> ... (one coefficient per lattice slot)
//   minus_one <c0> <c1> ...
//   fiber <name>
//     comp <id> <self> <mult> [pa <int>] [node|cusp|sing ...]
//     pair <id1> <id2> <total> [@label | @label*count ...]
//   end
//
// ambient and k must precede curve and minus_one lines. Serialization is
// canonical: parsing its own output reproduces it byte for byte.
// ════════════════════════════════════════════════════════════════════

struct NamedFiber {
    std::string name;
    FiberConfig fiber;
};

struct ProblemConfig {
    Ambient ambient = Ambient::Plane;
    std::size_t k = 0;
    Regularity regularity = Regularity::Unknown;
    std::vector<DivClass> curves;
    std::vector<DivClass> minus_ones;
    std::vector<NamedFiber> fibers;

    SurfaceLattice lattice() const { return make_lattice(ambient, k); }
};

/// Parse a problem file. Throws ParseError naming the offending line.
ProblemConfig parse_config(std::istream& in);
ProblemConfig parse_config_string(const std::string& text);

/// Read and parse a file. Throws BadInput when the file cannot be read.
ProblemConfig load_config(const std::string& path);

/// Canonical text form: fixed directive order, pairs ascending, labels
/// sorted by name. parse(serialize(c)) serializes back identically.
std::string serialize_config(const ProblemConfig& c);

/// The catalog entry's lattice, curves, and fibers as a problem file.
ProblemConfig config_from_catalog(const CatalogEntry& entry);

} // namespace evensets

#endif
