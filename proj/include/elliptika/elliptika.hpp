#ifndef ELLIPTIKA_ELLIPTIKA_HPP
#define ELLIPTIKA_ELLIPTIKA_HPP

#include "elliptika/certify.hpp"
#include "elliptika/common.hpp"
#include "elliptika/eisenstein.hpp"
#include "elliptika/elliptic.hpp"
#include "elliptika/gamma.hpp"
#include "elliptika/jacobi.hpp"
#include "elliptika/kernels.hpp"
#include "elliptika/lfunc.hpp"
#include "elliptika/mellin.hpp"
#include "elliptika/parallel.hpp"
#include "elliptika/quadrature.hpp"
#include "elliptika/report.hpp"
#include "elliptika/theta.hpp"
#include "elliptika/transforms.hpp"

#endif
