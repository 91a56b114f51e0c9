#pragma once

#include "mjg/catalog.hpp"
#include "mjg/classify.hpp"
#include "mjg/combinatorics.hpp"
#include "mjg/complement.hpp"
#include "mjg/exceptional.hpp"
#include "mjg/finite_field.hpp"
#include "mjg/johnson.hpp"
#include "mjg/json_io.hpp"
#include "mjg/near_field.hpp"
#include "mjg/permgroup.hpp"
#include "mjg/permutation.hpp"
#include "mjg/verify.hpp"
