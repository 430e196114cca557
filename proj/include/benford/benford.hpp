#ifndef BENFORD_BENFORD_HPP
#define BENFORD_BENFORD_HPP

#include "asymptotics.hpp"
#include "common.hpp"
#include "digits.hpp"
#include "qseries.hpp"
#include "report_io.hpp"
#include "sequences.hpp"
#include "udstats.hpp"

#endif  // BENFORD_BENFORD_HPP
