#include "tsched/cli.hpp"

int main(int argc, char** argv) {
	return tsched::cli_main(argc, argv);
}
