#include <oddwalk/cli.hh>

#include <iostream>

int main(int argc, char * argv[])
{
    return oddwalk::run_cli(argc, argv, std::cout, std::cerr);
}
