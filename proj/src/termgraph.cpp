namespace adk {}
