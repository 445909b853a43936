fn main() {
    std::process::exit(extremal_sf::cli::run(std::env::args_os()));
}
