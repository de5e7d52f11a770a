#pragma once

#include "gxcat/errors.hpp"
#include "gxcat/numbers.hpp"
#include "gxcat/groups.hpp"
#include "gxcat/linalg.hpp"
#include "gxcat/cohomology.hpp"
#include "gxcat/report.hpp"
#include "gxcat/parallel.hpp"
#include "gxcat/fusion.hpp"
#include "gxcat/gauging.hpp"
#include "gxcat/twisted_double.hpp"
#include "gxcat/pointed.hpp"
#include "gxcat/io.hpp"
#include "gxcat/corpus.hpp"
