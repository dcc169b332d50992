#include "hopfft/scalar.hpp"
