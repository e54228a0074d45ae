//! Parse edge-list text (comments, CRLF), report errors with line numbers,
//! and render a graph back.

use fjoin::parse_edge_list;

fn main() {
    let text = "# triangle with a pendant\r\n4 4\r\n0 1\r\n1 2\r\n2 0\r\n\r\n2 3\r\n";
    let g = parse_edge_list(text).expect("valid input");
    print!("parsed and re-rendered:\n{}", g.to_edge_list());

    for bad in ["3 1\n0 0\n", "3 2\n0 1\n", "2 1\n0 5\n", "x y\n"] {
        match parse_edge_list(bad) {
            Ok(_) => println!("{bad:?} unexpectedly parsed"),
            Err(e) => println!("{bad:?}: {e}"),
        }
    }
}
