#pragma once

#include "psh/character.hpp"
#include "psh/ints.hpp"
#include "psh/partition.hpp"

namespace psh {

// Symmetric group character chi_lambda evaluated on the class of cycle type
// mu, by the Murnaghan-Nakayama rule over beta numbers.  Exact integers;
// independent of the Littlewood-Richardson machinery, which makes it usable
// as an oracle against it.
Int sn_character(const Partition& lambda, const Partition& mu);

// chi_lambda as a class function on an explicit S_n built by the wreath
// constructor over the trivial group (labels are permutation ranks).
ClassFunction sn_class_function(const Partition& lambda, const GroupData& sn);

}  // namespace psh
