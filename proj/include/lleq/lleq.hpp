#ifndef LLEQ_LLEQ_HPP
#define LLEQ_LLEQ_HPP

#include "lleq/scalar.hpp"
#include "lleq/operator.hpp"
#include "lleq/op_matrix.hpp"
#include "lleq/linalg.hpp"
#include "lleq/parse.hpp"
#include "lleq/word.hpp"
#include "lleq/clifford.hpp"
#include "lleq/structure.hpp"
#include "lleq/lle.hpp"
#include "lleq/susy.hpp"
#include "lleq/osp12.hpp"
#include "lleq/config.hpp"

#endif // LLEQ_LLEQ_HPP
