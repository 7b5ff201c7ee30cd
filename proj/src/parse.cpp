#include "oqk/field.hpp"
