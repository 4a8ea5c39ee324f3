#ifndef MKU_FIXTURE_HPP_
#define MKU_FIXTURE_HPP_

#include <string>
#include <vector>

#include "mku/field.hpp"
#include "mku/galois.hpp"
#include "mku/places.hpp"

namespace mku {

/* Field fixture as shipped in JSON: defining polynomial (lowest first,
 * monic), a fundamental system of units in power-basis coordinates, and
 * named subfield generators. Fixtures declare irreducibility; everything
 * cheaper (squarefree, no rational root, unit norms) is verified. */
struct SubfieldSpec {
    std::string label;
    RatPoly generator;

    bool operator==(SubfieldSpec const & o) const {
        return label == o.label && generator == o.generator;
    }
};

struct Fixture {
    std::string label;
    IntPoly min_poly;
    std::vector<RatPoly> units;
    std::vector<SubfieldSpec> subfields;

    bool operator==(Fixture const & o) const {
        return label == o.label && min_poly == o.min_poly && units == o.units &&
               subfields == o.subfields;
    }
};

/* Strict parse: wrong shapes, non-integer coefficients, and malformed
 * rational strings all land in invalid_fixture. */
Fixture parse_fixture(std::string const & text);
Fixture load_fixture(std::string const & path);

/* Canonical serialization; parse_fixture(fixture_json(f)) == f. */
std::string fixture_json(Fixture const & fx);

/* A fixture made runnable at one working precision: automorphisms
 * recovered and certified starting at that precision, places computed,
 * units materialized and norm-checked. Holds self-references, so it
 * stays where it was built. */
struct FieldContext {
    NumberField field;
    GaloisGroup group;
    PlaceSet places;
    std::vector<FieldElement> units;

    FieldContext(Fixture const & fx, mpfr_prec_t prec);
    FieldContext(FieldContext const &) = delete;
    FieldContext & operator=(FieldContext const &) = delete;
};

/* Generator element registered under the label; invalid_fixture when the
 * label is unknown. */
FieldElement subfield_generator(FieldContext const & ctx, Fixture const & fx,
                                std::string const & label);

} // namespace mku

#endif
