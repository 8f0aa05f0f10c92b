#ifndef VKD_VKD_HPP
#define VKD_VKD_HPP

#include "brackets.hpp"
#include "core.hpp"
#include "diagram.hpp"
#include "dp_bs.hpp"
#include "dp_cyclic.hpp"
#include "group.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "polygon.hpp"
#include "search.hpp"
#include "words.hpp"

#endif
