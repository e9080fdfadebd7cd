#pragma once

#include "wfbar/error.hpp"
#include "wfbar/text.hpp"
#include "wfbar/monotone_map.hpp"
#include "wfbar/barcode.hpp"
#include "wfbar/filtered_complex.hpp"
#include "wfbar/reduction.hpp"
#include "wfbar/homology_oracle.hpp"
#include "wfbar/distances.hpp"
#include "wfbar/spectrum.hpp"
#include "wfbar/profile.hpp"
#include "wfbar/conservation.hpp"
#include "wfbar/entropy.hpp"
#include "wfbar/geometry.hpp"
