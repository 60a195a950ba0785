#pragma once

#include "leibhom/homology/ce.hpp"
#include "leibhom/homology/chain_complex.hpp"
#include "leibhom/homology/fg.hpp"
#include "leibhom/homology/loday.hpp"
#include "leibhom/homology/pbw.hpp"
