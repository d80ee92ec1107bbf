#ifndef ANTIPODAL_ANTIPODAL_HPP
#define ANTIPODAL_ANTIPODAL_HPP

#include "cell_complex.hpp"
#include "checks.hpp"
#include "deleted_square.hpp"
#include "gf2.hpp"
#include "homology.hpp"
#include "json_io.hpp"
#include "q_table.hpp"
#include "simplicial.hpp"
#include "sphere_covers.hpp"

#endif // ANTIPODAL_ANTIPODAL_HPP
