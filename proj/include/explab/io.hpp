#pragma once

#include <string>

#include "explab/multiplicity.hpp"
#include "explab/rset.hpp"
#include "explab/structure.hpp"

namespace explab {

// Set file format: a JSON array of rational strings, e.g. ["1","3/2","-7"].
// ParseError messages carry the 1-based line number of the offending text.
RSet parse_set_json(const std::string& text);
RSet load_set_file(const std::string& path);

std::string set_to_json(const RSet& s);
std::string keyset_to_json(const KeySet& k);

// JSON object mapping value strings to count strings, in value order.
std::string table_to_json(const MultiplicityTable& t);

std::string witness_to_json(const DyadicWitness& w);

// Minimal CSV field quoting (RFC-style: quote when needed, double quotes).
std::string csv_escape(const std::string& field);

}  // namespace explab
